"""Homological invariants over GF(p).

Graded Betti numbers of a monomial ideal come from the upper Koszul
simplicial complexes over its lcm lattice:

    beta_{i, a}(I) = dim H~_{i-1}(K^a(I)),   K^a(I) = {W subset supp(a) : x^(a - W) in I}.

Projective dimension, depth (Auslander-Buchsbaum) and regularity are read
off the resulting table.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

import numpy as np

from . import _kernels
from .complex import SimplicialComplex, face_link, pure_skeleton, stanley_reisner
from .errors import InvalidInputError, ResourceLimitError
from .ideal import MonomialIdeal, degree, lcm, numeric_invariants

DENSE_LIMIT = 5000
MAX_LATTICE = 2**12


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    characteristic: int = 2

    def __post_init__(self):
        p = self.characteristic
        if isinstance(p, bool) or not isinstance(p, int) or not _is_prime(p) or p >= 2**31:
            raise InvalidInputError(f"field characteristic must be a prime below 2^31, got {p!r}")

    def to_json(self) -> dict:
        return {"characteristic": self.characteristic}


GF2 = FieldSpec(2)


# ---------------------------------------------------------------------------
# chain complexes

def matrix_rank(n_rows: int, n_cols: int, entries: list, p: int) -> int:
    """Rank over GF(p) of a matrix given as ``(row, col, value)`` triples."""
    if not entries or n_rows == 0 or n_cols == 0:
        return 0
    if max(n_rows, n_cols) > DENSE_LIMIT:
        rows: list[dict] = [dict() for _ in range(n_rows)]
        for r, c, v in entries:
            rows[r][c] = v
        return _kernels.sparse_rank_mod_p(rows, p)
    a = np.zeros((n_rows, n_cols), dtype=np.int64)
    for r, c, v in entries:
        a[r, c] = v
    return _kernels.rank_mod_p(a, p)


def reduced_homology_of_faces(faces_by_size: dict[int, list[tuple]], p: int) -> list[int]:
    """Ranks of ``H~_{-1}, H~_0, ...`` for a complex given by all its faces.

    ``faces_by_size[k]`` lists the faces with ``k`` vertices as sorted tuples;
    the empty face sits at ``k = 0``.  An empty mapping is the void complex,
    whose reduced homology vanishes.
    """
    if not faces_by_size:
        return []
    top = max(faces_by_size)
    index = {k: {f: j for j, f in enumerate(faces_by_size.get(k, ()))} for k in range(top + 1)}
    ranks = [0] * (top + 2)  # ranks[k] = rank of boundary from size-k faces
    for k in range(1, top + 1):
        lower = index[k - 1]
        entries = []
        for col, f in enumerate(faces_by_size.get(k, ())):
            for j in range(k):
                sub = f[:j] + f[j + 1:]
                entries.append((lower[sub], col, 1 if j % 2 == 0 else p - 1))
        ranks[k] = matrix_rank(len(lower), len(index[k]), entries, p)
    return [len(index[k]) - ranks[k] - ranks[k + 1] for k in range(top + 1)]


def reduced_homology_ranks(delta: SimplicialComplex, field: FieldSpec = GF2) -> list[int]:
    """``[rank H~_{-1}, ..., rank H~_{dim}]`` of ``delta`` over the given field."""
    return reduced_homology_of_faces(delta.faces_by_size(), field.characteristic)


# ---------------------------------------------------------------------------
# Betti numbers

@dataclass
class BettiTable:
    """Graded Betti numbers of an ideal (not of R/I).

    ``multigraded`` maps ``(i, exponent tuple)`` to a rank, ``coarse`` maps
    ``(i, total degree)`` to a rank.  Only nonzero entries are stored.
    """

    n: int
    multigraded: dict = field(default_factory=dict)
    coarse: dict = field(default_factory=dict)
    characteristic: int = 2

    @property
    def pd(self) -> int:
        return max(i for i, _ in self.coarse)

    @property
    def reg(self) -> int:
        return max(j - i for i, j in self.coarse)

    def is_linear(self) -> bool:
        return len({j - i for i, j in self.coarse}) == 1

    def total(self, i: int) -> int:
        return sum(b for (k, _), b in self.coarse.items() if k == i)

    def to_json(self) -> dict:
        rows: dict[str, dict[str, int]] = {}
        for (i, j), b in sorted(self.coarse.items()):
            rows.setdefault(str(i), {})[str(j)] = b
        multi = [
            {"i": i, "degree": list(a), "beta": b}
            for (i, a), b in sorted(self.multigraded.items(), key=lambda kv: (kv[0][0], degree(kv[0][1]), kv[0][1]))
        ]
        return {"characteristic": self.characteristic, "coarse": rows, "multigraded": multi}

    def __str__(self) -> str:
        # Macaulay2 layout: column i, row j - i
        if not self.coarse:
            return "(empty)"
        cols = range(self.pd + 1)
        shifts = sorted({j - i for i, j in self.coarse})
        lo, hi = shifts[0], shifts[-1]
        width = max(len(str(b)) for b in self.coarse.values()) + 1
        lines = ["      " + "".join(f"{i:>{width}}" for i in cols)]
        lines.append("total:" + "".join(f"{self.total(i):>{width}}" for i in cols))
        for s in range(lo, hi + 1):
            row = "".join(f"{self.coarse.get((i, i + s), '.'):>{width}}" for i in cols)
            lines.append(f"{s:>5}:" + row)
        return "\n".join(lines)


def lcm_lattice(I: MonomialIdeal, max_size: int = MAX_LATTICE) -> list[tuple]:
    """All lcms of nonempty subsets of ``G(I)``, built by closure."""
    seen = set(I.gens)
    frontier = list(I.gens)
    while frontier:
        new = []
        for a in frontier:
            for g in I.gens:
                m = lcm(a, g)
                if m not in seen:
                    seen.add(m)
                    new.append(m)
        if len(seen) > max_size:
            raise ResourceLimitError(
                f"lcm lattice has more than {max_size} elements; raise the cap or shrink the input"
            )
        frontier = new
    return sorted(seen, key=lambda m: (degree(m), m))


def upper_koszul_faces(I: MonomialIdeal, alpha: tuple) -> dict[int, list[tuple]]:
    supp = [j for j, e in enumerate(alpha) if e]
    faces: dict[int, list[tuple]] = {}
    for k in range(len(supp) + 1):
        for w in combinations(supp, k):
            m = list(alpha)
            for j in w:
                m[j] -= 1
            if tuple(m) in I:
                faces.setdefault(k, []).append(w)
    return faces


def betti_table(
    I: MonomialIdeal,
    field: FieldSpec = GF2,
    max_gens: Optional[int] = None,
    max_lattice: int = MAX_LATTICE,
    workers: int = 1,
) -> BettiTable:
    if max_gens is not None and len(I.gens) > max_gens:
        raise ResourceLimitError(f"{len(I.gens)} minimal generators exceed the cap of {max_gens}")
    p = field.characteristic
    lattice = lcm_lattice(I, max_lattice)

    def strand(alpha):
        return alpha, reduced_homology_of_faces(upper_koszul_faces(I, alpha), p)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(strand, lattice))
    else:
        results = [strand(a) for a in lattice]

    table = BettiTable(I.n, characteristic=p)
    for alpha, ranks in results:
        d = degree(alpha)
        for idx, b in enumerate(ranks):
            if b:
                i = idx  # H~_{i-1} sits at list position i
                table.multigraded[(i, alpha)] = b
                table.coarse[(i, d)] = table.coarse.get((i, d), 0) + b
    return table


@dataclass(frozen=True)
class HomologicalInvariants:
    pd_RmodI: int
    depth_RmodI: int
    reg_RmodI: int
    reg_I: int

    def to_json(self) -> dict:
        return {
            "pd_RmodI": self.pd_RmodI,
            "depth_RmodI": self.depth_RmodI,
            "reg_RmodI": self.reg_RmodI,
            "reg_I": self.reg_I,
        }


def invariants_from_table(table: BettiTable) -> HomologicalInvariants:
    pd = table.pd + 1
    return HomologicalInvariants(
        pd_RmodI=pd,
        depth_RmodI=table.n - pd,
        reg_RmodI=table.reg - 1,
        reg_I=table.reg,
    )


def homological_invariants(I: MonomialIdeal, field: FieldSpec = GF2, **kwargs) -> HomologicalInvariants:
    return invariants_from_table(betti_table(I, field, **kwargs))


def depth(I: MonomialIdeal, field: FieldSpec = GF2) -> int:
    """``depth(R/I)``."""
    return homological_invariants(I, field).depth_RmodI


# ---------------------------------------------------------------------------
# Cohen-Macaulay tests for complexes

def is_cohen_macaulay(delta: SimplicialComplex, field: FieldSpec = GF2) -> bool:
    """Reisner's criterion: ``H~_i(link F) = 0`` for ``i < dim link F`` over all faces."""
    p = field.characteristic
    for f in delta.faces():
        lk = face_link(delta, f)
        ranks = reduced_homology_of_faces(lk.faces_by_size(), p)
        # ranks[0] is H~_{-1}; the top entry is H~_{dim lk}
        if any(ranks[:-1]):
            return False
    return True


def is_cohen_macaulay_by_depth(delta: SimplicialComplex, field: FieldSpec = GF2) -> bool:
    """``depth R/I_Delta == dim R/I_Delta`` computed from the Betti table."""
    I = stanley_reisner(delta)
    if I is None:
        return True
    return homological_invariants(I, field).depth_RmodI == numeric_invariants(I).krull_dim


def is_sequentially_cm(delta: SimplicialComplex, field: FieldSpec = GF2) -> bool:
    """Every pure skeleton ``Delta^[i]`` is Cohen-Macaulay."""
    return all(is_cohen_macaulay(pure_skeleton(delta, i), field) for i in range(delta.dim + 2))
