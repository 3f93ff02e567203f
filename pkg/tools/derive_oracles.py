"""Independent high-precision oracle for the values frozen in tests/frozen.py.

Uses mpmath at 40 digits and shares no code with the package: lambda0 is
obtained by solving the two constraint lines directly, minima are located
as roots of the derivative rather than by golden-section search, and the
squeeze profile is inverted with mpmath.findroot.

    python tools/derive_oracles.py > /tmp/oracles.txt
"""
import mpmath as mp

mp.mp.dps = 40


def omega(w):
    return 2 * mp.pi ** (mp.mpf(w + 1) / 2) / mp.gamma(mp.mpf(w + 1) / 2)


def mu_sphere(n):
    return n * (n - 1) * omega(n) ** (mp.mpf(2) / n)


def lam0(v, w, c):
    # solve lambda + tau = 1, lambda c^2 s_1 + tau s_0 = s_c
    s0 = w * (w - 1)
    s1 = w * (w - 1) - v * (v - 1)
    sc = w * (w - 1) - c**2 * v * (v - 1)
    return (sc - s0) / (c**2 * s1 - s0)


def general(v, w, g, c):
    n = v + w
    return (g - lam0(v, w, c) * (g - c ** (mp.mpf(2 * w) / n))) * mu_sphere(n)


def refined(v, w, g, c):
    A, B = v * (v - 1), w * (w - 1)
    frac = c**2 * A / ((1 - c**2) * B + c**2 * A)
    return g * mu_sphere(v + w) * (1 - (1 - c) * frac)


def argmin(fn):
    grid = [mp.mpf(i) / 400 for i in range(1, 400)]
    c0 = min(grid, key=fn)
    c = mp.findroot(lambda x: mp.diff(fn, x), c0)
    return c, fn(c)


def main():
    print("# sphere volumes omega_w, w = 1..11")
    for w in range(1, 12):
        print(f"OMEGA[{w}] = {mp.nstr(omega(w), 20)}")
    print("# sphere Yamabe constants mu(S^n), n = 3..11")
    for n in range(3, 12):
        print(f"MU[{n}] = {mp.nstr(mu_sphere(n), 20)}")
    wu = 30 * (mp.sqrt(3) / 8 * mp.pi**3) ** (mp.mpf(2) / 5)
    print("WU =", mp.nstr(wu, 20))
    print("S3XS3 =", mp.nstr(12 * (2 * mp.pi**2) ** (mp.mpf(2) / 3), 20))
    # normalized volume of HP^2 relative to the round 8-sphere
    ratio = mp.mpf(2) ** 8 / mp.mpf(7) ** 3
    print("HP_RATIO =", mp.nstr(ratio, 20), " HP_RATIO_POW =", mp.nstr(ratio ** (mp.mpf(2) / 9), 20))

    cubic = [r for r in mp.polyroots([5, 0, 3, -2]) if abs(mp.im(r)) < mp.mpf(10) ** -30][0]
    print("CUBIC_ROOT =", mp.nstr(mp.re(cubic), 20))

    # product formula gamma for n = 6 (v = 4, w = 2)
    def a(n):
        return mp.mpf(4 * (n - 1)) / (n - 2)

    n, m = 6, 3
    mu0 = n * a(n) / (mp.mpf(24) ** (mp.mpf(3) / n) * (m * a(m)) ** (mp.mpf(m) / n)) \
        * mu_sphere(m) ** (mp.mpf(m) / n) * mu_sphere(3) ** (mp.mpf(3) / n)
    print("PRODUCT_GAMMA_6 =", mp.nstr(mu0 / mu_sphere(6), 20))

    print("# surgery table: numeric minima of the general bound (v, w, gamma): (argmin, value)")
    for v, w, g in ((2, 2, "0.68"), (2, 3, "0.75"), (2, 7, "0.747"), (2, 8, "0.626"),
                    (3, 2, "0.63"), (4, 2, "0.568")):
        c, val = argmin(lambda c: general(v, w, mp.mpf(g), c))
        print(f"NUMERIC[({v},{w})] = ({mp.nstr(c, 16)}, {mp.nstr(val, 16)})")

    print("# refined (4,2) with gamma 0.56885")
    c, val = argmin(lambda c: refined(4, 2, mp.mpf("0.56885"), c))
    print(f"REFINED_42 = ({mp.nstr(c, 16)}, {mp.nstr(val, 16)})")

    print("# squeeze v = 3 profile: f(r) for c in {0.5, 1}")
    for c in (mp.mpf("0.5"), mp.mpf(1)):
        for r in (mp.mpf("0.5"), mp.mpf(1), mp.mpf(2), mp.mpf(5)):
            def vol(t):
                # integral_0^t (sinh(c s)/c)^2 ds in closed form
                return (mp.sinh(2 * c * t) / (4 * c) - t / 2) / c**2
            t = mp.findroot(lambda t: vol(t) - r**3 / 3, r / 2)
            fp = (r / (mp.sinh(c * t) / c)) ** 2
            print(f"SQUEEZE3[({mp.nstr(c, 3)},{mp.nstr(r, 3)})] = ({mp.nstr(t, 18)}, {mp.nstr(fp, 18)})")


if __name__ == "__main__":
    main()
