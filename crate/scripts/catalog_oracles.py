"""Reference values for the catalog evaluators (mpmath, 30 digits)."""
import mpmath as mp

mp.mp.dps = 30


def show(label, v):
    v = mp.mpc(v)
    print(f"{label}: ({mp.nstr(v.real, 17)}, {mp.nstr(v.imag, 17)})")


print("# F(z) = Ai(-z), F'(z) = -Ai'(-z)")
for z in [mp.mpf("0.5"), mp.mpc(2.5, 1), mp.mpf(5), mp.mpf(7.9),
          mp.mpc(0, 1) * 3, 7.5 * mp.expjpi(mp.mpf(2.9) / mp.pi),
          12 * mp.expj(0.3), 10 * mp.expjpi(mp.mpf(5) / 9), 5 * mp.expjpi(mp.mpf(5) / 9)]:
    show(f"z={mp.nstr(z, 17)} F", mp.airyai(-z))
    show(f"z={mp.nstr(z, 17)} dF", -mp.airyai(-z, derivative=1))
print("# Airy zeros")
for k in [1, 2, 3, 10, 100, 1000]:
    print(k, mp.nstr(-mp.airyaizero(k), 20))
print("# U(a, z) and U'(a, z)")
for a in [0, 1, 2.5, -0.3]:
    for z in [mp.mpf(0), mp.mpf("0.7"), mp.mpf(3), mp.mpf(10), mp.mpc(1, 2)]:
        u = mp.pcfu(a, z)
        du = mp.diff(lambda x: mp.pcfu(a, x), z)
        print(f"a={a} z={mp.nstr(z,6)} U={mp.nstr(u,18)} dU={mp.nstr(du,18)}")
print("# M(a, b, z)")
for (a, b) in [(0.5, 1.5), (1.2, 2.7)]:
    for z in [mp.mpf(3), mp.mpc(-2, 5), mp.mpf(50)]:
        print(f"a={a} b={b} z={mp.nstr(z,6)} M={mp.nstr(mp.hyp1f1(a,b,z),18)}")
