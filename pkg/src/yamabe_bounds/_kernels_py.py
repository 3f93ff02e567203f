"""Pure-Python kernels for the radial squeezing map.

Mirrors ``_kernels_c.pyx`` line for line; used when the compiled module is
missing or YAMABE_BOUNDS_PURE_PYTHON is set.
"""
import math

SMALL_ARG = 1e-4
INITIAL_PANELS = 4
MAX_NEWTON = 100
# quadratic convergence: one step below this lands at round-off level
NEWTON_RTOL = 1e-14
ROUNDOFF = 1e-14


def sh(c, t):
    """sinh(c t) / c, with the c -> 0 limit t."""
    if c == 0.0:
        return t
    x = c * t
    if abs(x) < SMALL_ARG:
        return t * (1.0 + x * x / 6.0)
    return math.sinh(x) / c


def _simpson(c, p, a, fa, b, fb, whole, tol, depth, state):
    m = 0.5 * (a + b)
    lm = 0.5 * (a + m)
    rm = 0.5 * (m + b)
    fm = sh(c, m) ** p
    flm = sh(c, lm) ** p
    frm = sh(c, rm) ** p
    state[0] += 3
    # each half gets its own width: m is only the rounded midpoint
    left = (m - a) / 6.0 * (fa + 4.0 * flm + fm)
    right = (b - m) / 6.0 * (fm + 4.0 * frm + fb)
    delta = left + right - whole
    # below ROUNDOFF the difference is floating-point noise
    floor = max(15.0 * tol, ROUNDOFF * abs(left + right))
    if abs(delta) <= floor or depth <= 0:
        if abs(delta) > floor:
            state[1] = 0
        state[2] += abs(delta) / 15.0
        return left + right + delta / 15.0
    return (_simpson(c, p, a, fa, m, fm, left, 0.5 * tol, depth - 1, state)
            + _simpson(c, p, m, fm, b, fb, right, 0.5 * tol, depth - 1, state))


def sh_power_integral(c, p, b, tol, max_depth=50):
    """Adaptive Simpson estimate of the integral of sh_c(t)^p over [0, b].

    Returns ``(value, error_estimate, evaluations, converged)``.
    """
    if b <= 0.0:
        return 0.0, 0.0, 0, True
    state = [0, 1, 0.0]  # evaluations, converged flag, accumulated error
    total = 0.0
    width = b / INITIAL_PANELS
    a = 0.0
    fa = sh(c, a) ** p
    state[0] += 1
    for i in range(1, INITIAL_PANELS + 1):
        e = b if i == INITIAL_PANELS else i * width
        fe = sh(c, e) ** p
        fm = sh(c, 0.5 * (a + e)) ** p
        state[0] += 2
        whole = (e - a) / 6.0 * (fa + 4.0 * fm + fe)
        total += _simpson(c, p, a, fa, e, fe, whole, tol / INITIAL_PANELS, max_depth, state)
        a, fa = e, fe
    return total, state[2], state[0], bool(state[1])


def invert_ball_volume(c, v, r, tol, max_depth=50):
    """Solve integral_0^t sh_c^(v-1) = r^v / v for t in [0, r].

    Safeguarded Newton: the derivative of the left side is sh_c(t)^(v-1),
    and bisection takes over whenever a step leaves the bracket.  ``tol`` is
    the quadrature tolerance relative to the target r^v / v.

    Returns ``(t, quad_error, iterations, status)`` where status is 0 on
    success, 1 on quadrature failure, 2 on Newton failure.
    """
    if r <= 0.0:
        return 0.0, 0.0, 0, 0
    if c == 0.0:
        return r, 0.0, 0, 0
    p = v - 1
    target = r**v / v
    qtol = tol * target
    lo, hi = 0.0, r

    # sinh(x) <= e^x / 2 makes this an underestimate of the root
    t = r
    scale = p * c * (2.0 * c) ** p
    if target * scale > 1.0:
        guess = math.log(target * scale) / (p * c)
        if 0.0 < guess < r:
            t = guess

    quad_err = 0.0
    for it in range(1, MAX_NEWTON + 1):
        value, quad_err, _, ok = sh_power_integral(c, p, t, qtol, max_depth)
        if not ok:
            return t, quad_err, it, 1
        g = value - target
        if g == 0.0:
            return t, quad_err, it, 0
        if g < 0.0:
            lo = t
        else:
            hi = t
        slope = sh(c, t) ** p
        step = g / slope if slope > 0.0 else math.inf
        t_new = t - step
        if abs(t_new - t) <= NEWTON_RTOL * t:
            return t_new, quad_err, it, 0
        if not lo < t_new < hi:
            t_new = 0.5 * (lo + hi)
            if hi - lo <= NEWTON_RTOL * hi:
                return t_new, quad_err, it, 0
        t = t_new
    return t, quad_err, MAX_NEWTON, 2
