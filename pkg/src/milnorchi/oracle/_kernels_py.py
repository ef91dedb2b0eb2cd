"""Pure-Python twin of ``_kernels.pyx``.

Same signatures and results; used when the compiled module is missing or
``MILNORCHI_PURE=1`` is set. Elements are rows of ``P`` (permutation,
``e_j -> e_{P[j]}``) and ``E`` (phase exponents mod ``r``).
"""

import numpy as np


def encode(P, E, r):
    P = np.asarray(P, dtype=np.int64)
    E = np.asarray(E, dtype=np.int64)
    n, l = P.shape
    rl = r**l
    out = np.empty(n, dtype=np.int64)
    for k, (perm, exps) in enumerate(zip(P.tolist(), E.tolist())):
        pc = 0
        ec = 0
        for j in range(l - 1, -1, -1):
            pc = pc * l + perm[j]
            ec = ec * r + exps[j]
        out[k] = pc * rl + ec
    return out


def _key(perm, exps, l, r, rl):
    pc = 0
    ec = 0
    for j in range(l - 1, -1, -1):
        pc = pc * l + perm[j]
        ec = ec * r + exps[j]
    return pc * rl + ec


def conjugate_keys(P, E, r, hp, he):
    """Keys of ``k h k^-1`` for every row ``k``."""
    n, l = P.shape
    rl = r**l
    hp = list(hp)
    he = list(he)
    out = np.empty(n, dtype=np.int64)
    ip = [0] * l
    ie = [0] * l
    tp = [0] * l
    te = [0] * l
    cp = [0] * l
    ce = [0] * l
    for k, (kp, ke) in enumerate(zip(P.tolist(), E.tolist())):
        for j in range(l):
            ip[kp[j]] = j
            ie[kp[j]] = -ke[j] % r
        for j in range(l):
            tp[j] = hp[ip[j]]
            te[j] = ie[j] + he[ip[j]]
        for j in range(l):
            cp[j] = kp[tp[j]]
            ce[j] = (te[j] + ke[tp[j]]) % r
        out[k] = _key(cp, ce, l, r, rl)
    return out


def commutes(P, E, r, hp, he):
    n, l = P.shape
    hp = list(hp)
    he = list(he)
    out = np.zeros(n, dtype=np.uint8)
    for k, (kp, ke) in enumerate(zip(P.tolist(), E.tolist())):
        ok = 1
        for j in range(l):
            # (k h)[j] vs (h k)[j]
            if kp[hp[j]] != hp[kp[j]] or (he[j] + ke[hp[j]]) % r != (ke[j] + he[kp[j]]) % r:
                ok = 0
                break
        out[k] = ok
    return out


def multiply_keys(P, E, r, gp, ge):
    """Keys of ``k g`` for every row ``k``."""
    n, l = P.shape
    rl = r**l
    gp = list(gp)
    ge = list(ge)
    out = np.empty(n, dtype=np.int64)
    cp = [0] * l
    ce = [0] * l
    for k, (kp, ke) in enumerate(zip(P.tolist(), E.tolist())):
        for j in range(l):
            cp[j] = kp[gp[j]]
            ce[j] = (ge[j] + ke[gp[j]]) % r
        out[k] = _key(cp, ce, l, r, rl)
    return out


def regular_spectra(P, E, r, coord, D):
    """Distinct eigenvalues (units of 1/D), their dimensions and regularity.

    Returns ``(vals, dims, regular, counts)``; row ``k`` holds ``counts[k]``
    valid entries. Dimensions are in the monomial representation on C^l.
    """
    n, l = P.shape
    step = D // r
    vals = np.zeros((n, l), dtype=np.int64)
    dims = np.zeros((n, l), dtype=np.int64)
    regular = np.zeros((n, l), dtype=np.uint8)
    counts = np.zeros(n, dtype=np.int64)
    for k, (perm, exps) in enumerate(zip(P.tolist(), E.tolist())):
        seen = [False] * l
        cycles = []
        for start in range(l):
            if seen[start]:
                continue
            cyc = []
            j = start
            while not seen[j]:
                seen[j] = True
                cyc.append(j)
                j = perm[j]
            s = sum(exps[x] for x in cyc)
            cycles.append((cyc, s))
        spectrum = {}
        for idx, (cyc, s) in enumerate(cycles):
            c = len(cyc)
            for t in range(c):
                lam = (s * (D // (r * c)) + t * (D // c)) % D
                spectrum.setdefault(lam, []).append(idx)
        nv = 0
        for lam in sorted(spectrum):
            carriers = spectrum[lam]
            covered = sum(len(cycles[i][0]) for i in carriers)
            ok = True
            if coord and covered < l:
                ok = False
            elif l - covered >= 2:
                ok = False
            else:
                for i in carriers:
                    cyc = cycles[i][0]
                    entry = {cyc[0]: 0}
                    for a in range(len(cyc) - 1):
                        j = cyc[a]
                        entry[perm[j]] = (entry[j] + exps[j] * step - lam) % D
                    vs = [entry[j] for j in cyc]
                    for a in range(len(vs)):
                        for b in range(a + 1, len(vs)):
                            if (vs[a] - vs[b]) % step == 0:
                                ok = False
                                break
                        if not ok:
                            break
                    if not ok:
                        break
            vals[k, nv] = lam
            dims[k, nv] = len(carriers)
            regular[k, nv] = ok
            nv += 1
        counts[k] = nv
    return vals, dims, regular, counts
