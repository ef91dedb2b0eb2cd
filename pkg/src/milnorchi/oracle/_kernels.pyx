# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot loops for the monomial-group oracle.

Mirrors ``_kernels_py.py`` exactly; see there for conventions.
"""

import numpy as np
cimport numpy as cnp

cnp.import_array()

ctypedef cnp.int64_t i64

cdef enum:
    MAXL = 64


cdef inline i64 _mod(i64 a, i64 m) nogil:
    cdef i64 x = a % m
    return x + m if x < 0 else x


cdef inline i64 _key(i64* perm, i64* exps, int l, i64 r, i64 rl) nogil:
    cdef i64 pc = 0, ec = 0
    cdef int j
    for j in range(l - 1, -1, -1):
        pc = pc * l + perm[j]
        ec = ec * r + exps[j]
    return pc * rl + ec


def encode(P, E, i64 r):
    cdef i64[:, ::1] p = np.ascontiguousarray(P, dtype=np.int64)
    cdef i64[:, ::1] e = np.ascontiguousarray(E, dtype=np.int64)
    cdef Py_ssize_t n = p.shape[0], k
    cdef int l = p.shape[1]
    cdef i64 rl = r ** l
    out = np.empty(n, dtype=np.int64)
    cdef i64[::1] o = out
    with nogil:
        for k in range(n):
            o[k] = _key(&p[k, 0], &e[k, 0], l, r, rl)
    return out


def conjugate_keys(P, E, i64 r, hp, he):
    cdef i64[:, ::1] p = np.ascontiguousarray(P, dtype=np.int64)
    cdef i64[:, ::1] e = np.ascontiguousarray(E, dtype=np.int64)
    cdef i64[::1] hP = np.ascontiguousarray(hp, dtype=np.int64)
    cdef i64[::1] hE = np.ascontiguousarray(he, dtype=np.int64)
    cdef Py_ssize_t n = p.shape[0], k
    cdef int l = p.shape[1], j
    if l > MAXL:
        raise ValueError("rank too large")
    cdef i64 rl = r ** l
    cdef i64 ip[MAXL]
    cdef i64 ie[MAXL]
    cdef i64 tp[MAXL]
    cdef i64 te[MAXL]
    cdef i64 cp[MAXL]
    cdef i64 ce[MAXL]
    out = np.empty(n, dtype=np.int64)
    cdef i64[::1] o = out
    with nogil:
        for k in range(n):
            for j in range(l):
                ip[p[k, j]] = j
                ie[p[k, j]] = _mod(-e[k, j], r)
            for j in range(l):
                tp[j] = hP[ip[j]]
                te[j] = ie[j] + hE[ip[j]]
            for j in range(l):
                cp[j] = p[k, tp[j]]
                ce[j] = (te[j] + e[k, tp[j]]) % r
            o[k] = _key(cp, ce, l, r, rl)
    return out


def commutes(P, E, i64 r, hp, he):
    cdef i64[:, ::1] p = np.ascontiguousarray(P, dtype=np.int64)
    cdef i64[:, ::1] e = np.ascontiguousarray(E, dtype=np.int64)
    cdef i64[::1] hP = np.ascontiguousarray(hp, dtype=np.int64)
    cdef i64[::1] hE = np.ascontiguousarray(he, dtype=np.int64)
    cdef Py_ssize_t n = p.shape[0], k
    cdef int l = p.shape[1], j
    cdef unsigned char ok
    out = np.zeros(n, dtype=np.uint8)
    cdef unsigned char[::1] o = out
    with nogil:
        for k in range(n):
            ok = 1
            for j in range(l):
                if p[k, hP[j]] != hP[p[k, j]]:
                    ok = 0
                    break
                if (hE[j] + e[k, hP[j]]) % r != (e[k, j] + hE[p[k, j]]) % r:
                    ok = 0
                    break
            o[k] = ok
    return out


def multiply_keys(P, E, i64 r, gp, ge):
    cdef i64[:, ::1] p = np.ascontiguousarray(P, dtype=np.int64)
    cdef i64[:, ::1] e = np.ascontiguousarray(E, dtype=np.int64)
    cdef i64[::1] gP = np.ascontiguousarray(gp, dtype=np.int64)
    cdef i64[::1] gE = np.ascontiguousarray(ge, dtype=np.int64)
    cdef Py_ssize_t n = p.shape[0], k
    cdef int l = p.shape[1], j
    if l > MAXL:
        raise ValueError("rank too large")
    cdef i64 rl = r ** l
    cdef i64 cp[MAXL]
    cdef i64 ce[MAXL]
    out = np.empty(n, dtype=np.int64)
    cdef i64[::1] o = out
    with nogil:
        for k in range(n):
            for j in range(l):
                cp[j] = p[k, gP[j]]
                ce[j] = (gE[j] + e[k, gP[j]]) % r
            o[k] = _key(cp, ce, l, r, rl)
    return out


def regular_spectra(P, E, i64 r, bint coord, i64 D):
    cdef i64[:, ::1] p = np.ascontiguousarray(P, dtype=np.int64)
    cdef i64[:, ::1] e = np.ascontiguousarray(E, dtype=np.int64)
    cdef Py_ssize_t n = p.shape[0], k
    cdef int l = p.shape[1]
    if l > MAXL:
        raise ValueError("rank too large")
    cdef i64 step = D // r
    vals_a = np.zeros((n, l), dtype=np.int64)
    dims_a = np.zeros((n, l), dtype=np.int64)
    reg_a = np.zeros((n, l), dtype=np.uint8)
    counts_a = np.zeros(n, dtype=np.int64)
    cdef i64[:, ::1] vals = vals_a
    cdef i64[:, ::1] dims = dims_a
    cdef unsigned char[:, ::1] reg = reg_a
    cdef i64[::1] counts = counts_a

    # per-element scratch
    cdef int seen[MAXL]
    cdef int cyc_start[MAXL]   # first coordinate of each cycle
    cdef int cyc_len[MAXL]
    cdef i64 cyc_sum[MAXL]
    cdef i64 lam_list[MAXL]
    cdef int nlam, ncyc, j, a, b, c, t, ci, cnt, covered, x
    cdef i64 lam, s
    cdef i64 entry[MAXL]
    cdef bint ok, carries, dup

    with nogil:
        for k in range(n):
            for j in range(l):
                seen[j] = 0
            ncyc = 0
            for j in range(l):
                if seen[j]:
                    continue
                cyc_start[ncyc] = j
                c = 0
                s = 0
                x = j
                while not seen[x]:
                    seen[x] = 1
                    s += e[k, x]
                    c += 1
                    x = p[k, x]
                cyc_len[ncyc] = c
                cyc_sum[ncyc] = s
                ncyc += 1
            # collect distinct eigenvalues
            nlam = 0
            for ci in range(ncyc):
                c = cyc_len[ci]
                for t in range(c):
                    lam = (cyc_sum[ci] * (D // (r * c)) + t * (D // c)) % D
                    dup = 0
                    for a in range(nlam):
                        if lam_list[a] == lam:
                            dup = 1
                            break
                    if not dup:
                        lam_list[nlam] = lam
                        nlam += 1
            # sort ascending (insertion sort, nlam <= l)
            for a in range(1, nlam):
                lam = lam_list[a]
                b = a - 1
                while b >= 0 and lam_list[b] > lam:
                    lam_list[b + 1] = lam_list[b]
                    b -= 1
                lam_list[b + 1] = lam
            for a in range(nlam):
                lam = lam_list[a]
                cnt = 0
                covered = 0
                ok = 1
                for ci in range(ncyc):
                    c = cyc_len[ci]
                    # cycle carries lam iff c*lam == sum*D/r (mod D)
                    carries = _mod(c * lam - cyc_sum[ci] * step, D) == 0
                    if not carries:
                        continue
                    cnt += 1
                    covered += c
                    if ok:
                        x = cyc_start[ci]
                        entry[0] = 0
                        for t in range(1, c):
                            entry[t] = _mod(entry[t - 1] + e[k, x] * step - lam, D)
                            x = p[k, x]
                        for t in range(c):
                            for b in range(t + 1, c):
                                if _mod(entry[t] - entry[b], step) == 0:
                                    ok = 0
                                    break
                            if not ok:
                                break
                if coord and covered < l:
                    ok = 0
                elif l - covered >= 2:
                    ok = 0
                vals[k, a] = lam
                dims[k, a] = cnt
                reg[k, a] = ok
            counts[k] = nlam
    return vals_a, dims_a, reg_a, counts_a
