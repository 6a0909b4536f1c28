"""Check the parabolic cylinder closed forms for zeta_U(3..5) against -n b_n
computed in 40-digit arithmetic from the Taylor series of U(a, z) at 0."""
import mpmath as mp

mp.mp.dps = 40


def log_coeffs(c):
    h = [x / c[0] for x in c]
    b = [mp.mpf(0)] * len(c)
    for j in range(1, len(c)):
        b[j] = h[j] - sum(mp.mpf(l) / j * h[j - l] * b[l] for l in range(1, j))
    return b


def closed(a, n):
    r = mp.gamma((2 * a + 3) / 4) / mp.gamma((2 * a + 1) / 4)
    s2 = mp.sqrt(2)
    return {
        3: 2 * s2 * r**3 - s2 * a * r,
        4: 4 * r**4 - 8 * a / 3 * r**2 + (4 * a * a - 1) / 12,
        5: 4 * s2 * r**5 - 10 * s2 * a / 3 * r**3 + s2 / 24 * (16 * a * a - 1) * r,
    }[n]


for a in map(mp.mpf, ["0", "1", "2.5", "-0.3", "4"]):
    b = log_coeffs(mp.taylor(lambda z: mp.pcfu(a, z), 0, 6))
    for n in (3, 4, 5):
        err = abs(-n * b[n] - closed(a, n))
        assert err < mp.mpf("1e-30"), (a, n, err)
        print(f"a = {mp.nstr(a, 3)}  zeta_U({n}) = {mp.nstr(-n * b[n], 17)}  |diff| {mp.nstr(err, 2)}")
