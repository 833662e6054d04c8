"""Reference values for the C++ tests, computed with mpmath at 30 digits.

zeta_2 uses the Hurwitz form sum_m m^{-s0} zeta(s, m+1) with the large-m
expansion of zeta(s, m+1) subtracted and summed in closed form, which
continues it to Re(s0 + s) > 1 independently of the library's routes.
"""
import mpmath as mp

mp.mp.dps = 30


def zeta2(s0, s, M=400, P=8):
    s0 = mp.mpmathify(s0)
    s = mp.mpmathify(s)
    terms = [(1 / (s - 1), s - 1), (-mp.mpf(1) / 2, s)]
    for p in range(1, P + 1):
        terms.append((mp.bernoulli(2 * p) / mp.factorial(2 * p) * mp.rf(s, 2 * p - 1), s + 2 * p - 1))
    total = sum(c * mp.zeta(s0 + e) for c, e in terms)
    for m in range(1, M + 1):
        rem = mp.zeta(s, m + 1) - sum(c * mp.power(m, -e) for c, e in terms)
        total += mp.power(m, -s0) * rem
    return total


def zeta2_sq(s0, w):
    z = mp.zeta(s0)
    return mp.nsum(lambda k: abs(z - mp.zeta(s0, k)) ** 2 * k ** (-w), [2, mp.inf], method="e")


def gamma2(s0):
    s0 = mp.mpmathify(s0)
    return mp.zeta(s0) * mp.euler - zeta2(1, s0) - mp.zeta(s0 + 1)


def show(name, z):
    z = mp.mpc(z)
    print(f"{name:34s} {mp.nstr(z.real, 17):>24s} {mp.nstr(z.imag, 17):>24s}")


if __name__ == "__main__":
    show("loggamma(3+4i)", mp.loggamma(mp.mpc(3, 4)))
    show("loggamma(-2.5+0.1i)", mp.loggamma(mp.mpc(-2.5, 0.1)))
    show("loggamma(0.1-30i)", mp.loggamma(mp.mpc(0.1, -30)))
    show("digamma(0.3+2i)", mp.digamma(mp.mpc(0.3, 2)))
    show("digamma(-1.5+0.5i)", mp.digamma(mp.mpc(-1.5, 0.5)))
    show("trigamma(1.5-3i)", mp.psi(1, mp.mpc(1.5, -3)))
    show("zeta(0.5+14i)", mp.zeta(mp.mpc(0.5, 14)))
    show("zeta(0.2+100i)", mp.zeta(mp.mpc(0.2, 100)))
    show("zeta(2.5-1i)", mp.zeta(mp.mpc(2.5, -1)))
    show("zeta'(2), zeta''(2)", mp.mpc(mp.zeta(2, 1, 1), mp.zeta(2, 1, 2)))
    show("d/du zeta(u,0.3) at 1.5+3i", mp.zeta(mp.mpc(1.5, 3), 0.3, 1))
    show("zeta(0.5+10i, 2.5)", mp.zeta(mp.mpc(0.5, 10), 2.5))
    show("H_199(1.3+2i)", mp.fsum(mp.power(m, -mp.mpc(1.3, 2)) for m in range(1, 200)))
    show("H_199(1)", mp.fsum(mp.mpf(1) / m for m in range(1, 200)))
    f = lambda m: mp.mpf(m) ** -2 * (m + mp.mpf(3.5)) ** mp.mpc(-1.5, -4)
    show("sum_{m>100} m^-2 (m+3.5)^(-1.5-4i)", mp.nsum(f, [101, mp.inf], method="e"))
    for a in [(1.2, (0.7, 20)), (1.3, (0.9, 5)), (0.8, (0.8, 10)), (2, (0.8, 15)),
              (1, (0.8, 10)), (0.6, (0.9, 3)), (1.4, (0.6, 40)), ((1.3, 2), (1.5, -4)),
              (3, (0.2, 7))]:
        s0 = mp.mpc(*a[0]) if isinstance(a[0], tuple) else a[0]
        show(f"zeta2({a[0]},{a[1]})", zeta2(s0, mp.mpc(*a[1])))
    for a in [(2, 3), (2, 1.6), (1.2, 1.4), (0.8, 1.8)]:
        show(f"zeta2_sq{a}", zeta2_sq(*a))
    for s0 in [2, 3, mp.mpc(2, 1), mp.mpc(1.5, 0.5)]:
        show(f"gamma2({s0})", gamma2(s0))
