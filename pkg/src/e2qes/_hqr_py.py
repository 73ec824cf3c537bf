"""Pure-Python Hessenberg QR kernel (fallback for the compiled ``_hqr_ext``).

Francis implicit double-shift QR on a real upper Hessenberg matrix, with
optional diagonal balancing first.  Indices are 1-based internally so the
two backends share line-by-line structure.
"""
from __future__ import annotations

import math

import numpy as np

RADIX = 2.0
EPS = 2.220446049250313e-16


def _balance(a: list[list[float]], n: int) -> None:
    sqrdx = RADIX * RADIX
    done = False
    while not done:
        done = True
        for i in range(1, n + 1):
            r = c = 0.0
            for j in range(1, n + 1):
                if j != i:
                    c += abs(a[j][i])
                    r += abs(a[i][j])
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
                    row = a[i]
                    for j in range(1, n + 1):
                        row[j] *= g
                    for j in range(1, n + 1):
                        a[j][i] *= f


def _hqr(a: list[list[float]], n: int, wr: list[float], wi: list[float], max_its: int) -> int:
    anorm = 0.0
    for i in range(1, n + 1):
        for j in range(max(i - 1, 1), n + 1):
            anorm += abs(a[i][j])
    nn = n
    t = 0.0
    while nn >= 1:
        its = 0
        while True:
            l = 1
            for ll in range(nn, 1, -1):
                s = abs(a[ll - 1][ll - 1]) + abs(a[ll][ll])
                if s == 0.0:
                    s = anorm
                if abs(a[ll][ll - 1]) <= EPS * s:
                    a[ll][ll - 1] = 0.0
                    l = ll
                    break
            x = a[nn][nn]
            if l == nn:
                wr[nn] = x + t
                wi[nn] = 0.0
                nn -= 1
                break
            y = a[nn - 1][nn - 1]
            w = a[nn][nn - 1] * a[nn - 1][nn]
            if l == nn - 1:
                p = 0.5 * (y - x)
                q = p * p + w
                z = math.sqrt(abs(q))
                x += t
                if q >= 0.0:
                    z = p + math.copysign(z, p)
                    wr[nn - 1] = wr[nn] = x + z
                    if z != 0.0:
                        wr[nn] = x - w / z
                    wi[nn - 1] = wi[nn] = 0.0
                else:
                    wr[nn - 1] = wr[nn] = x + p
                    wi[nn - 1] = -z
                    wi[nn] = z
                nn -= 2
                break
            if its == max_its:
                return 1
            if its == 10 or its == 20:
                t += x
                for i in range(1, nn + 1):
                    a[i][i] -= x
                s = abs(a[nn][nn - 1]) + abs(a[nn - 1][nn - 2])
                x = y = 0.75 * s
                w = -0.4375 * s * s
            its += 1
            m = nn - 2
            while m >= l:
                z = a[m][m]
                r = x - z
                s = y - z
                p = (r * s - w) / a[m + 1][m] + a[m][m + 1]
                q = a[m + 1][m + 1] - z - r - s
                r = a[m + 2][m + 1]
                s = abs(p) + abs(q) + abs(r)
                p /= s
                q /= s
                r /= s
                if m == l:
                    break
                u = abs(a[m][m - 1]) * (abs(q) + abs(r))
                v = abs(p) * (abs(a[m - 1][m - 1]) + abs(z) + abs(a[m + 1][m + 1]))
                if u <= EPS * v:
                    break
                m -= 1
            for i in range(m + 2, nn + 1):
                a[i][i - 2] = 0.0
                if i != m + 2:
                    a[i][i - 3] = 0.0
            for k in range(m, nn):
                if k != m:
                    p = a[k][k - 1]
                    q = a[k + 1][k - 1]
                    r = 0.0
                    if k != nn - 1:
                        r = a[k + 2][k - 1]
                    x = abs(p) + abs(q) + abs(r)
                    if x != 0.0:
                        p /= x
                        q /= x
                        r /= x
                s = math.copysign(math.sqrt(p * p + q * q + r * r), p)
                if s != 0.0:
                    if k == m:
                        if l != m:
                            a[k][k - 1] = -a[k][k - 1]
                    else:
                        a[k][k - 1] = -s * x
                    p += s
                    x = p / s
                    y = q / s
                    z = r / s
                    q /= p
                    r /= p
                    rk, rk1 = a[k], a[k + 1]
                    if k != nn - 1:
                        rk2 = a[k + 2]
                        for j in range(k, nn + 1):
                            p = rk[j] + q * rk1[j] + r * rk2[j]
                            rk2[j] -= p * z
                            rk1[j] -= p * y
                            rk[j] -= p * x
                    else:
                        for j in range(k, nn + 1):
                            p = rk[j] + q * rk1[j]
                            rk1[j] -= p * y
                            rk[j] -= p * x
                    mmin = nn if nn < k + 3 else k + 3
                    if k != nn - 1:
                        for i in range(l, mmin + 1):
                            ai = a[i]
                            p = x * ai[k] + y * ai[k + 1] + z * ai[k + 2]
                            ai[k + 2] -= p * r
                            ai[k + 1] -= p * q
                            ai[k] -= p
                    else:
                        for i in range(l, mmin + 1):
                            ai = a[i]
                            p = x * ai[k] + y * ai[k + 1]
                            ai[k + 1] -= p * q
                            ai[k] -= p
            if l >= nn - 1:
                break
    return 0


def hessenberg_eigvals(h: np.ndarray, balance: bool = True, max_its: int = 60):
    """Eigenvalues of a real upper Hessenberg matrix.

    Returns ``(wr, wi, status)`` with ``status == 0`` on convergence.
    Entries below the first subdiagonal are ignored.
    """
    h = np.asarray(h, dtype=np.float64)
    n = h.shape[0]
    a = [[0.0] * (n + 1)]
    for i in range(n):
        a.append([0.0] + [float(v) for v in h[i]])
    for i in range(3, n + 1):
        for j in range(1, i - 1):
            a[i][j] = 0.0
    if balance:
        _balance(a, n)
    wr = [0.0] * (n + 1)
    wi = [0.0] * (n + 1)
    status = _hqr(a, n, wr, wi, max_its)
    return np.array(wr[1:]), np.array(wi[1:]), status


BACKEND = "python"
