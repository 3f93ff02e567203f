# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for the radial squeezing map.

Same algorithms and return conventions as ``_kernels_py``.
"""
from libc.math cimport sinh, fabs, fmax, log, pow, INFINITY

cdef double SMALL_ARG = 1e-4
cdef int INITIAL_PANELS = 4
cdef int MAX_NEWTON = 100
cdef double NEWTON_RTOL = 1e-14
cdef double ROUNDOFF = 1e-14


cdef inline double _sh(double c, double t) nogil:
    cdef double x
    if c == 0.0:
        return t
    x = c * t
    if fabs(x) < SMALL_ARG:
        return t * (1.0 + x * x / 6.0)
    return sinh(x) / c


cdef inline double _ipow(double x, int p) nogil:
    cdef double out = 1.0
    cdef int i
    for i in range(p):
        out *= x
    return out


cdef struct QuadState:
    long evaluations
    int converged
    double error


cdef double _simpson(double c, int p, double a, double fa, double b, double fb,
                     double whole, double tol, int depth, QuadState* st) nogil:
    cdef double m = 0.5 * (a + b)
    cdef double lm = 0.5 * (a + m)
    cdef double rm = 0.5 * (m + b)
    cdef double fm = _ipow(_sh(c, m), p)
    cdef double flm = _ipow(_sh(c, lm), p)
    cdef double frm = _ipow(_sh(c, rm), p)
    # each half gets its own width: m is only the rounded midpoint
    cdef double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm)
    cdef double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb)
    cdef double delta = left + right - whole
    cdef double floor = fmax(15.0 * tol, ROUNDOFF * fabs(left + right))
    st.evaluations += 3
    if fabs(delta) <= floor or depth <= 0:
        if fabs(delta) > floor:
            st.converged = 0
        st.error += fabs(delta) / 15.0
        return left + right + delta / 15.0
    return (_simpson(c, p, a, fa, m, fm, left, 0.5 * tol, depth - 1, st)
            + _simpson(c, p, m, fm, b, fb, right, 0.5 * tol, depth - 1, st))


cdef double _integral(double c, int p, double b, double tol, int max_depth,
                      QuadState* st) nogil:
    cdef double total = 0.0
    cdef double width, a, fa, e, fe, fm, whole
    cdef int i
    st.evaluations = 0
    st.converged = 1
    st.error = 0.0
    if b <= 0.0:
        return 0.0
    width = b / INITIAL_PANELS
    a = 0.0
    fa = _ipow(_sh(c, a), p)
    st.evaluations += 1
    for i in range(1, INITIAL_PANELS + 1):
        e = b if i == INITIAL_PANELS else i * width
        fe = _ipow(_sh(c, e), p)
        fm = _ipow(_sh(c, 0.5 * (a + e)), p)
        st.evaluations += 2
        whole = (e - a) / 6.0 * (fa + 4.0 * fm + fe)
        total += _simpson(c, p, a, fa, e, fe, whole, tol / INITIAL_PANELS, max_depth, st)
        a = e
        fa = fe
    return total


def sh(double c, double t):
    """sinh(c t) / c, with the c -> 0 limit t."""
    return _sh(c, t)


def sh_power_integral(double c, int p, double b, double tol, int max_depth=50):
    """Adaptive Simpson estimate of the integral of sh_c(t)^p over [0, b].

    Returns ``(value, error_estimate, evaluations, converged)``.
    """
    cdef QuadState st
    cdef double value = _integral(c, p, b, tol, max_depth, &st)
    return value, st.error, st.evaluations, bool(st.converged)


def invert_ball_volume(double c, int v, double r, double tol, int max_depth=50):
    """Solve integral_0^t sh_c^(v-1) = r^v / v for t in [0, r].

    Returns ``(t, quad_error, iterations, status)``; status 0 is success,
    1 a quadrature failure, 2 a Newton failure.
    """
    cdef int p = v - 1
    cdef double target, qtol, lo, hi, t, scale, guess, value, g, slope, step, t_new
    cdef QuadState st
    cdef int it
    st.error = 0.0
    if r <= 0.0:
        return 0.0, 0.0, 0, 0
    if c == 0.0:
        return r, 0.0, 0, 0
    target = pow(r, v) / v
    qtol = tol * target
    lo = 0.0
    hi = r

    t = r
    scale = p * c * _ipow(2.0 * c, p)
    if target * scale > 1.0:
        guess = log(target * scale) / (p * c)
        if 0.0 < guess < r:
            t = guess

    for it in range(1, MAX_NEWTON + 1):
        value = _integral(c, p, t, qtol, max_depth, &st)
        if not st.converged:
            return t, st.error, it, 1
        g = value - target
        if g == 0.0:
            return t, st.error, it, 0
        if g < 0.0:
            lo = t
        else:
            hi = t
        slope = _ipow(_sh(c, t), p)
        step = g / slope if slope > 0.0 else INFINITY
        t_new = t - step
        if fabs(t_new - t) <= NEWTON_RTOL * t:
            return t_new, st.error, it, 0
        if not (lo < t_new < hi):
            t_new = 0.5 * (lo + hi)
            if hi - lo <= NEWTON_RTOL * hi:
                return t_new, st.error, it, 0
        t = t_new
    return t, st.error, MAX_NEWTON, 2
