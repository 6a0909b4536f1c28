"""Least-squares fit of ln F(z - mu) on the ray z = t e^{i psi}, t in [50, 200].

Fits sum_{j,k} W_{j,k} z^{alpha - j/m} ln^k z in 100-digit arithmetic and prints
the j <= 4 coefficients as a Rust table for crates/core/tests/omega_fit.rs.
ln F is assembled as (leading exponential part) + principal log of a ratio
close to 1, so it is continuous along the ray up to one constant 2*pi*i*k.
"""
import mpmath as mp

mp.mp.dps = 100
PI = mp.pi


def ln_riemann(w):
    return -mp.loggamma(1 - w)


def ln_airy(w):
    x = -w
    zeta = mp.mpf(2) / 3 * x ** mp.mpf(1.5)
    lead = -zeta - mp.log(2 * mp.sqrt(PI)) - mp.log(x) / 4
    ratio = mp.airyai(x) * 2 * mp.sqrt(PI) * x ** mp.mpf(0.25) * mp.exp(zeta)
    return lead + mp.log(ratio)


def ln_pcf(a):
    def f(w):
        lead = -w * w / 4 - (a + mp.mpf(1) / 2) * mp.log(w)
        ratio = mp.pcfu(a, w) * mp.exp(w * w / 4) * w ** (a + mp.mpf(1) / 2)
        return lead + mp.log(ratio)
    return f


def ln_chf(a, b):
    # dominant exponential part of M only: the recessive U(a, b, w) term is
    # e^{-w} ~ 1e-22 smaller at t = 50 and would otherwise cap the fit there
    def f(w):
        lead = w + (a - b) * mp.log(w) + mp.loggamma(b) - mp.loggamma(a)
        ratios = [mp.expj(sg * PI * (a - b)) * mp.hyperu(b - a, b, -w) * w ** (b - a) for sg in (1, -1)]
        ratio = min(ratios, key=lambda r: abs(r - 1))
        return lead + mp.log(ratio)
    return f


CASES = [
    # name, ln F, alpha, m, psi, mu, depth of fit, sample weight rate.
    # The confluent expansion diverges like n!/t^n, so it is only good to
    # ~e^{-t}; weighting by e^{(t-50)/2} lets the far end carry the fit.
    ("riemann", ln_riemann, 1, 1, 3 * PI / 4, mp.mpc("0.35", "-0.2"), 22, 0),
    ("airy", ln_airy, mp.mpf(3) / 2, 2, 5 * PI / 9, mp.mpc("0.3", "0.1"), 34, 0),
    ("pcf", ln_pcf(mp.mpf("0.5")), 2, 1, 0, mp.mpc("0.25", "0.15"), 24, 0),
    ("chf", ln_chf(mp.mpf("0.5"), mp.mpf("1.5")), 1, 1, 0, mp.mpc("0.2", "-0.1"), 24, mp.mpf(1) / 2),
]


def fit(lnf, alpha, m, psi, mu, depth, rate, samples=140):
    cols = []
    for j in range(depth + 1):
        e = alpha - mp.mpf(j) / m
        cols.append((j, 0, e))
        if e >= 0 and e == int(e):
            cols.append((j, 1, e))
    rows, rhs = [], []
    for i in range(samples):
        t = 50 * mp.mpf(4) ** (mp.mpf(i) / (samples - 1))
        z = t * mp.expj(psi)
        lz = mp.log(t) + 1j * psi
        wt = mp.exp(rate * (t - 50))
        rows.append([wt * mp.exp(e * lz) * lz ** k for (_, k, e) in cols])
        rhs.append(wt * lnf(z - mu))
    a = mp.matrix(rows)
    scale = [max(abs(a[i, c]) for i in range(samples)) for c in range(len(cols))]
    for c in range(len(cols)):
        for i in range(samples):
            a[i, c] /= scale[c]
    x, res = mp.qr_solve(a, mp.matrix(rhs))
    return {(j, k): x[c] / scale[c] for c, (j, k, _) in enumerate(cols)}, res


def main():
    print("// generated by scripts/omega_lsq_oracle.py")
    for name, lnf, alpha, m, psi, mu, depth, rate in CASES:
        coeffs, res = fit(lnf, alpha, m, psi, mu, depth, rate)
        half, _ = fit(lnf, alpha, m, psi, mu, depth - 4, rate)
        print(f"// {name}: mu = {mu}, residual {mp.nstr(res, 3)}")
        for (j, k), v in sorted(coeffs.items()):
            if j > 4:
                continue
            drift = abs(v - half[(j, k)]) / max(abs(v), mp.mpf("1e-3"))
            assert drift < mp.mpf("1e-8"), (name, j, k, drift)
            print(f'    ("{name}", {j}, {k}, {mp.nstr(v.real, 17)}, {mp.nstr(v.imag, 17)}),')


if __name__ == "__main__":
    main()
