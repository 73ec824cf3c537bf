# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled Hessenberg QR kernel; mirrors ``_hqr_py`` statement for statement."""
import numpy as np

from libc.math cimport fabs, sqrt, copysign

cdef double RADIX = 2.0
cdef double EPS = 2.220446049250313e-16


cdef void _balance(double[:, ::1] a, int n) noexcept nogil:
    cdef double sqrdx = RADIX * RADIX
    cdef bint done = False
    cdef int i, j
    cdef double r, c, g, f, s
    while not done:
        done = True
        for i in range(1, n + 1):
            r = 0.0
            c = 0.0
            for j in range(1, n + 1):
                if j != i:
                    c += fabs(a[j, i])
                    r += fabs(a[i, j])
            if c != 0.0 and r != 0.0:
                g = r / RADIX
                f = 1.0
                s = c + r
                while c < g:
                    f *= RADIX
                    c *= sqrdx
                g = r * RADIX
                while c > g:
                    f /= RADIX
                    c /= sqrdx
                if (c + r) / f < 0.95 * s:
                    done = False
                    g = 1.0 / f
                    for j in range(1, n + 1):
                        a[i, j] *= g
                    for j in range(1, n + 1):
                        a[j, i] *= f


cdef int _hqr(double[:, ::1] a, int n, double[::1] wr, double[::1] wi, int max_its) noexcept nogil:
    cdef int nn, m, l, ll, k, j, its, i, mmin
    cdef double z = 0.0, y, x, w, v, u, t, s, r = 0.0, q = 0.0, p = 0.0, anorm = 0.0
    for i in range(1, n + 1):
        for j in range(i - 1 if i > 1 else 1, n + 1):
            anorm += fabs(a[i, j])
    nn = n
    t = 0.0
    while nn >= 1:
        its = 0
        while True:
            l = 1
            ll = nn
            while ll > 1:
                s = fabs(a[ll - 1, ll - 1]) + fabs(a[ll, ll])
                if s == 0.0:
                    s = anorm
                if fabs(a[ll, ll - 1]) <= EPS * s:
                    a[ll, ll - 1] = 0.0
                    l = ll
                    break
                ll -= 1
            x = a[nn, nn]
            if l == nn:
                wr[nn] = x + t
                wi[nn] = 0.0
                nn -= 1
                break
            y = a[nn - 1, nn - 1]
            w = a[nn, nn - 1] * a[nn - 1, nn]
            if l == nn - 1:
                p = 0.5 * (y - x)
                q = p * p + w
                z = sqrt(fabs(q))
                x += t
                if q >= 0.0:
                    z = p + copysign(z, p)
                    wr[nn - 1] = x + z
                    wr[nn] = x + z
                    if z != 0.0:
                        wr[nn] = x - w / z
                    wi[nn - 1] = 0.0
                    wi[nn] = 0.0
                else:
                    wr[nn - 1] = x + p
                    wr[nn] = x + p
                    wi[nn - 1] = -z
                    wi[nn] = z
                nn -= 2
                break
            if its == max_its:
                return 1
            if its == 10 or its == 20:
                t += x
                for i in range(1, nn + 1):
                    a[i, i] -= x
                s = fabs(a[nn, nn - 1]) + fabs(a[nn - 1, nn - 2])
                x = 0.75 * s
                y = x
                w = -0.4375 * s * s
            its += 1
            m = nn - 2
            while m >= l:
                z = a[m, m]
                r = x - z
                s = y - z
                p = (r * s - w) / a[m + 1, m] + a[m, m + 1]
                q = a[m + 1, m + 1] - z - r - s
                r = a[m + 2, m + 1]
                s = fabs(p) + fabs(q) + fabs(r)
                p /= s
                q /= s
                r /= s
                if m == l:
                    break
                u = fabs(a[m, m - 1]) * (fabs(q) + fabs(r))
                v = fabs(p) * (fabs(a[m - 1, m - 1]) + fabs(z) + fabs(a[m + 1, m + 1]))
                if u <= EPS * v:
                    break
                m -= 1
            for i in range(m + 2, nn + 1):
                a[i, i - 2] = 0.0
                if i != m + 2:
                    a[i, i - 3] = 0.0
            for k in range(m, nn):
                if k != m:
                    p = a[k, k - 1]
                    q = a[k + 1, k - 1]
                    r = 0.0
                    if k != nn - 1:
                        r = a[k + 2, k - 1]
                    x = fabs(p) + fabs(q) + fabs(r)
                    if x != 0.0:
                        p /= x
                        q /= x
                        r /= x
                s = copysign(sqrt(p * p + q * q + r * r), p)
                if s != 0.0:
                    if k == m:
                        if l != m:
                            a[k, k - 1] = -a[k, k - 1]
                    else:
                        a[k, k - 1] = -s * x
                    p += s
                    x = p / s
                    y = q / s
                    z = r / s
                    q /= p
                    r /= p
                    if k != nn - 1:
                        for j in range(k, nn + 1):
                            p = a[k, j] + q * a[k + 1, j] + r * a[k + 2, j]
                            a[k + 2, j] -= p * z
                            a[k + 1, j] -= p * y
                            a[k, j] -= p * x
                    else:
                        for j in range(k, nn + 1):
                            p = a[k, j] + q * a[k + 1, j]
                            a[k + 1, j] -= p * y
                            a[k, j] -= p * x
                    mmin = nn if nn < k + 3 else k + 3
                    if k != nn - 1:
                        for i in range(l, mmin + 1):
                            p = x * a[i, k] + y * a[i, k + 1] + z * a[i, k + 2]
                            a[i, k + 2] -= p * r
                            a[i, k + 1] -= p * q
                            a[i, k] -= p
                    else:
                        for i in range(l, mmin + 1):
                            p = x * a[i, k] + y * a[i, k + 1]
                            a[i, k + 1] -= p * q
                            a[i, k] -= p
            if l >= nn - 1:
                break
    return 0


def hessenberg_eigvals(h, bint balance=True, int max_its=60):
    """Eigenvalues of a real upper Hessenberg matrix; returns ``(wr, wi, status)``."""
    h = np.asarray(h, dtype=np.float64)
    cdef int n = h.shape[0]
    buf = np.zeros((n + 1, n + 1), dtype=np.float64)
    buf[1:, 1:] = np.triu(h, -1)
    cdef double[:, ::1] a = buf
    wr_arr = np.zeros(n + 1, dtype=np.float64)
    wi_arr = np.zeros(n + 1, dtype=np.float64)
    cdef double[::1] wr = wr_arr
    cdef double[::1] wi = wi_arr
    cdef int status
    with nogil:
        if balance:
            _balance(a, n)
        status = _hqr(a, n, wr, wi, max_its)
    return wr_arr[1:].copy(), wi_arr[1:].copy(), status


BACKEND = "cython"
