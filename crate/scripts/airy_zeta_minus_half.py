# zeta_Ai(s) continued: exact zeros n<N, then Euler-Maclaurin on the asymptotic zero formula with the
# integral continued analytically term by term.
from mpmath import mp, mpf, airyaizero, pi, taylor, bernoulli, diff, factorial
mp.dps = 30
s = mpf(-0.5)
N = 150
Tc = [1, mpf(5)/48, -mpf(5)/36, mpf(77125)/82944, -mpf(108056875)/6967296, mpf(162375596875)/334430208]
def T(x):  # x = 3pi/8 (4t-1)
    return x**(mpf(2)/3)*sum(c*x**(-2*k) for k,c in enumerate(Tc))
def f(t):
    return T(3*pi/8*(4*t-1))**(-s)
head = sum((-airyaizero(n))**(-s) for n in range(1, N))
# (1+g(y))^{-s}, y = x^{-2}
e = taylor(lambda y: (sum(c*y**k for k,c in enumerate(Tc)))**(-s), 0, 5)
X = 3*pi/8*(4*N-1)
# int_N^inf x^{-2s/3-2k} dt, dt = 2/(3pi) dx
integral = sum(ek*(2/(3*pi))*X**(1-(2*s/3+2*k))/((2*s/3+2*k)-1) for k,ek in enumerate(e))
em = f(N)/2
for k in range(1,6):
    em -= bernoulli(2*k)/factorial(2*k)*diff(f, N, 2*k-1)
print(head+integral+em)
