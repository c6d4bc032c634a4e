"""Pure-Python kernels. Reference semantics for the compiled twins in ``_ckernels``.

Both modules expose the same two functions with the same array contract:

``floyd_warshall(code, k, base, left, right, reach, xi)``
    ``base``/``left``/``right`` are float64 n×n arrays with the edge weights
    (diagonal ignored), ``reach`` a uint8 n×n edge mask. Returns
    ``(base, left, right, reach, nxt, cell, pool_a, pool_b)`` where ``nxt``
    is the next-hop matrix (-1 = none) and ``cell`` indexes the path record
    of each pair in the pool (-1 unreachable, -2 empty path). A pool record
    ``(a, b)`` with ``a < 0`` is the edge ``-a-1 -> b``; otherwise it is the
    concatenation of records ``a`` and ``b``.

``insertion_sort(code, k, base, left, right, xi)``
    Returns the int64 permutation that the thresholded insertion sort applies.
"""
import numpy as np

from .relations import degree

UNREACHABLE = -1
EMPTY = -2


def floyd_warshall(code, k, base, left, right, reach, xi):
    n = base.shape[0]
    db = base.tolist()
    dl = left.tolist()
    dr = right.tolist()
    ok = [[bool(v) for v in row] for row in reach.tolist()]
    nxt = [[-1] * n for _ in range(n)]
    cell = [[UNREACHABLE] * n for _ in range(n)]
    pool_a = []
    pool_b = []

    for i in range(n):
        for j in range(n):
            if i == j:
                db[i][i] = dl[i][i] = dr[i][i] = 0.0
                ok[i][i] = True
                nxt[i][i] = i
                cell[i][i] = EMPTY
            elif ok[i][j]:
                nxt[i][j] = j
                cell[i][j] = len(pool_a)
                pool_a.append(-i - 1)
                pool_b.append(j)

    for kk in range(n):
        okk = ok[kk]
        dbk, dlk, drk, ck = db[kk], dl[kk], dr[kk], cell[kk]
        for i in range(n):
            if not ok[i][kk]:
                continue
            oki, dbi, dli, dri, ci, ni = ok[i], db[i], dl[i], dr[i], cell[i], nxt[i]
            for j in range(n):
                if not okk[j]:
                    continue
                sb = dbi[kk] + dbk[j]
                sl = max(dli[kk], dlk[j])
                sr = max(dri[kk], drk[j])
                if oki[j]:
                    if sb > dbi[j]:
                        continue
                    eq = degree(code, max(sl, dli[j]), max(sr, dri[j]), k, dbi[j], sb)
                    if not 1.0 - eq > xi:
                        continue
                dbi[j], dli[j], dri[j] = sb, sl, sr
                oki[j] = True
                ni[j] = ni[kk]
                a, b = ci[kk], ck[j]
                if a == EMPTY:
                    ci[j] = b
                elif b == EMPTY:
                    ci[j] = a
                else:
                    ci[j] = len(pool_a)
                    pool_a.append(a)
                    pool_b.append(b)

    return (
        np.array(db, dtype=np.float64).reshape(n, n),
        np.array(dl, dtype=np.float64).reshape(n, n),
        np.array(dr, dtype=np.float64).reshape(n, n),
        np.array(ok, dtype=np.uint8).reshape(n, n),
        np.array(nxt, dtype=np.int64).reshape(n, n),
        np.array(cell, dtype=np.int64).reshape(n, n),
        np.array(pool_a, dtype=np.int64),
        np.array(pool_b, dtype=np.int64),
    )


def insertion_sort(code, k, base, left, right, xi):
    b = base.tolist()
    l = left.tolist()
    r = right.tolist()
    perm = list(range(len(b)))
    for i in range(1, len(perm)):
        key = perm[i]
        kb, kl, kr = b[key], l[key], r[key]
        j = i - 1
        while j >= 0:
            o = perm[j]
            if kb > b[o]:
                break
            eq = degree(code, max(kl, l[o]), max(kr, r[o]), k, b[o], kb)
            if not 1.0 - eq > xi:
                break
            perm[j + 1] = o
            j -= 1
        perm[j + 1] = key
    return np.array(perm, dtype=np.int64)
