"""Pure-Python rank kernels over GF(p): a numpy dense path and a dict-of-rows sparse path."""
import numpy as np


def rank_mod_p(matrix, p: int) -> int:
    """Rank of an integer matrix reduced modulo the prime ``p``."""
    a = np.mod(np.array(matrix, dtype=np.int64), p)
    if a.ndim != 2 or a.size == 0:
        return 0
    rows, cols = a.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        inv = pow(int(a[r, c]), -1, p)
        if inv != 1:
            a[r] = (a[r] * inv) % p
        below = np.flatnonzero(a[r + 1:, c]) + r + 1
        if below.size:
            a[below] = (a[below] - np.outer(a[below, c], a[r])) % p
        r += 1
    return r


def sparse_rank_mod_p(rows, p: int) -> int:
    """Rank of a sparse matrix given as an iterable of ``{column: value}`` rows.

    Keeps a pivot table keyed by leading column; each incoming row is reduced
    against it until it vanishes or introduces a new pivot.
    """
    pivots: dict[int, dict[int, int]] = {}
    for row in rows:
        cur = {c: v % p for c, v in row.items() if v % p}
        while cur:
            lead = min(cur)
            prow = pivots.get(lead)
            if prow is None:
                inv = pow(cur[lead], -1, p)
                pivots[lead] = {c: (v * inv) % p for c, v in cur.items()}
                break
            f = cur[lead]
            for c, v in prow.items():
                nv = (cur.get(c, 0) - f * v) % p
                if nv:
                    cur[c] = nv
                else:
                    cur.pop(c, None)
    return len(pivots)
