# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled inner loop of the bounded-variable simplex.

Mirrors the numpy fallback in expdom.lp step for step (same entering rule,
ratio test, tie handling, and floating-point operation order), so both
backends produce identical pivots. Only the per-iteration work lives here;
problem setup and phase logic stay in Python.
"""

from libc.math cimport INFINITY, fabs

# status codes shared with the Python driver
DEF STATUS_OPTIMAL = 0
DEF STATUS_UNBOUNDED = 1
DEF STATUS_ITER_LIMIT = 2

DEF RCOST_TOL = 1e-9
DEF PIVOT_TOL = 1e-9
DEF RATIO_TIE_TOL = 1e-9


def iterate(double[:, ::1] T, double[::1] z, double[::1] xb,
            long[::1] basis, unsigned char[::1] is_basic,
            unsigned char[::1] at_upper, unsigned char[::1] allow,
            double[::1] lo, double[::1] hi,
            double[::1] col_buf, double[::1] ratio_buf,
            long bland_after, long max_iter):
    """Run primal pivots to optimality; returns (status, iterations).

    All arrays are mutated in place. ``col_buf`` and ``ratio_buf`` are scratch
    vectors of length m.
    """
    cdef Py_ssize_t m = T.shape[0]
    cdef Py_ssize_t ncols = T.shape[1]
    cdef long iterations = 0
    cdef long degen_streak = 0
    cdef bint bland = False
    cdef Py_ssize_t j, i, r, jj, bi
    cdef double score, best_score, sigma, d, t_self, step, rmin, ratio
    cdef double piv, f, zj, enter_val, blo, bhi, best_abs, lim
    cdef bint found, kind_pivot

    while True:
        if iterations > max_iter:
            return STATUS_ITER_LIMIT, iterations
        # entering variable: Dantzig (first index attaining the max score),
        # or Bland (first improving index)
        j = -1
        best_score = RCOST_TOL
        for jj in range(ncols):
            if is_basic[jj] or not allow[jj]:
                continue
            if hi[jj] - lo[jj] <= RCOST_TOL:
                continue
            score = z[jj] if at_upper[jj] else -z[jj]
            if score > best_score:
                j = jj
                if bland:
                    break
                best_score = score
        if j < 0:
            return STATUS_OPTIMAL, iterations
        sigma = -1.0 if at_upper[j] else 1.0
        # cache the entering column before any row operation touches it
        for i in range(m):
            col_buf[i] = T[i, j]
        # ratio test
        t_self = hi[j] - lo[j]
        rmin = INFINITY
        for i in range(m):
            d = sigma * col_buf[i]
            bi = basis[i]
            if d > PIVOT_TOL:
                blo = lo[bi]
                ratio = (xb[i] - blo) / d if blo > -INFINITY else INFINITY
            elif d < -PIVOT_TOL:
                bhi = hi[bi]
                ratio = (xb[i] - bhi) / d if bhi < INFINITY else INFINITY
            else:
                ratio = INFINITY
            if ratio < 0.0:
                ratio = 0.0
            ratio_buf[i] = ratio
            if ratio < rmin:
                rmin = ratio
        kind_pivot = False
        r = -1
        if rmin < t_self - RATIO_TIE_TOL:
            kind_pivot = True
            if bland:
                # lowest basis index among the near-minimal ratios
                for i in range(m):
                    if ratio_buf[i] <= rmin + RATIO_TIE_TOL:
                        if r < 0 or basis[i] < basis[r]:
                            r = i
            else:
                # largest pivot magnitude among the near-minimal ratios
                best_abs = -1.0
                for i in range(m):
                    if ratio_buf[i] <= rmin + RATIO_TIE_TOL:
                        f = fabs(col_buf[i])
                        if f > best_abs:
                            best_abs = f
                            r = i
            step = ratio_buf[r]
        else:
            step = t_self if t_self < rmin else rmin
        if step == INFINITY:
            return STATUS_UNBOUNDED, iterations
        iterations += 1
        if step <= RATIO_TIE_TOL:
            degen_streak += 1
            if degen_streak > bland_after:
                bland = True
        else:
            degen_streak = 0
        if not kind_pivot:
            for i in range(m):
                xb[i] -= step * sigma * col_buf[i]
            at_upper[j] = not at_upper[j]
            continue
        # basis exchange at row r
        enter_val = (hi[j] if at_upper[j] else lo[j]) + sigma * step
        at_upper[basis[r]] = 1 if sigma * col_buf[r] < 0 else 0
        for i in range(m):
            xb[i] -= step * sigma * col_buf[i]
        piv = T[r, j]
        for jj in range(ncols):
            T[r, jj] /= piv
        for i in range(m):
            if i == r:
                continue
            f = col_buf[i]
            if f != 0.0:
                for jj in range(ncols):
                    T[i, jj] -= f * T[r, jj]
        zj = z[j]
        if zj != 0.0:
            for jj in range(ncols):
                z[jj] -= zj * T[r, jj]
        is_basic[basis[r]] = False
        is_basic[j] = True
        basis[r] = j
        xb[r] = enter_val
        at_upper[j] = False
