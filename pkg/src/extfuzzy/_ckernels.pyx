# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
# distutils: language = c++
"""Compiled kernels; contract documented in ``extfuzzy._pykernels``."""
import numpy as np
cimport numpy as cnp
from libc.math cimport exp, fabs
from libcpp.vector cimport vector

cnp.import_array()

cdef enum:
    TRI = 0
    TRAP = 1
    EXPABS = 2
    GAUSS = 3
    QUASI = 4

cdef long long UNREACHABLE = -1
cdef long long EMPTY = -2


cdef inline double _degree(int code, double left, double right, double k,
                           double x, double y) noexcept nogil:
    cdef double spread, dist, m
    if code == QUASI and not x > y:
        spread = right
    else:
        spread = left
    if spread == 0.0:
        return 1.0 if x == y else 0.0
    dist = fabs(x - y)
    if code == TRI or code == QUASI:
        m = 1.0 - dist / spread
        return m if m > 0.0 else 0.0
    if code == TRAP:
        m = 1.0 - dist / spread
        if m < 0.0:
            m = 0.0
        m = m / (1.0 - k)
        return m if m < 1.0 else 1.0
    if code == EXPABS:
        return exp(-dist / spread)
    m = dist / spread
    return exp(-(m * m) / 2.0)


cdef inline double _fmax(double a, double b) noexcept nogil:
    # Same tie behaviour as Python's builtin max on non-NaN input.
    return b if b > a else a


def floyd_warshall(int code, double k, base, left, right, reach, double xi):
    cdef Py_ssize_t n = base.shape[0]
    cdef double[:, ::1] db = np.array(base, dtype=np.float64, order="C")
    cdef double[:, ::1] dl = np.array(left, dtype=np.float64, order="C")
    cdef double[:, ::1] dr = np.array(right, dtype=np.float64, order="C")
    cdef cnp.uint8_t[:, ::1] ok = np.array(reach, dtype=np.uint8, order="C")
    nxt_arr = np.full((n, n), -1, dtype=np.int64)
    cell_arr = np.full((n, n), UNREACHABLE, dtype=np.int64)
    cdef cnp.int64_t[:, ::1] nxt = nxt_arr
    cdef cnp.int64_t[:, ::1] cell = cell_arr
    cdef vector[cnp.int64_t] pool_a
    cdef vector[cnp.int64_t] pool_b
    cdef Py_ssize_t i, j, kk
    cdef double sb, sl, sr, eq
    cdef cnp.int64_t a, b

    with nogil:
        for i in range(n):
            for j in range(n):
                if i == j:
                    db[i, i] = 0.0
                    dl[i, i] = 0.0
                    dr[i, i] = 0.0
                    ok[i, i] = 1
                    nxt[i, i] = i
                    cell[i, i] = EMPTY
                elif ok[i, j]:
                    ok[i, j] = 1
                    nxt[i, j] = j
                    cell[i, j] = <cnp.int64_t>pool_a.size()
                    pool_a.push_back(-i - 1)
                    pool_b.push_back(j)

        for kk in range(n):
            for i in range(n):
                if not ok[i, kk]:
                    continue
                for j in range(n):
                    if not ok[kk, j]:
                        continue
                    sb = db[i, kk] + db[kk, j]
                    sl = _fmax(dl[i, kk], dl[kk, j])
                    sr = _fmax(dr[i, kk], dr[kk, j])
                    if ok[i, j]:
                        if sb > db[i, j]:
                            continue
                        eq = _degree(code, _fmax(sl, dl[i, j]), _fmax(sr, dr[i, j]),
                                     k, db[i, j], sb)
                        if not 1.0 - eq > xi:
                            continue
                    db[i, j] = sb
                    dl[i, j] = sl
                    dr[i, j] = sr
                    ok[i, j] = 1
                    nxt[i, j] = nxt[i, kk]
                    a = cell[i, kk]
                    b = cell[kk, j]
                    if a == EMPTY:
                        cell[i, j] = b
                    elif b == EMPTY:
                        cell[i, j] = a
                    else:
                        cell[i, j] = <cnp.int64_t>pool_a.size()
                        pool_a.push_back(a)
                        pool_b.push_back(b)

    pa = np.empty(pool_a.size(), dtype=np.int64)
    pb = np.empty(pool_b.size(), dtype=np.int64)
    cdef cnp.int64_t[::1] pav = pa
    cdef cnp.int64_t[::1] pbv = pb
    for i in range(<Py_ssize_t>pool_a.size()):
        pav[i] = pool_a[i]
        pbv[i] = pool_b[i]
    return (np.asarray(db), np.asarray(dl), np.asarray(dr), np.asarray(ok),
            nxt_arr, cell_arr, pa, pb)


def insertion_sort(int code, double k, base, left, right, double xi):
    cdef double[::1] b = np.array(base, dtype=np.float64)
    cdef double[::1] l = np.array(left, dtype=np.float64)
    cdef double[::1] r = np.array(right, dtype=np.float64)
    cdef Py_ssize_t n = b.shape[0]
    perm_arr = np.arange(n, dtype=np.int64)
    cdef cnp.int64_t[::1] perm = perm_arr
    cdef Py_ssize_t i, j
    cdef cnp.int64_t key, o
    cdef double eq
    with nogil:
        for i in range(1, n):
            key = perm[i]
            j = i - 1
            while j >= 0:
                o = perm[j]
                if b[key] > b[o]:
                    break
                eq = _degree(code, _fmax(l[key], l[o]), _fmax(r[key], r[o]), k, b[o], b[key])
                if not 1.0 - eq > xi:
                    break
                perm[j + 1] = o
                j -= 1
            perm[j + 1] = key
    return perm_arr
