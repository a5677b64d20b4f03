"""Simplicial complexes stored by facets, and their Stanley-Reisner ideals.

Vertex labels are positive integers and double as variable indices: the
Stanley-Reisner ideal of a complex on vertex set ``V`` lives in
``K[x_1, ..., x_n]`` with ``n = max(V)`` unless an explicit ``n`` is given.
Labels in ``1..n`` outside ``V`` are free variables (they never occur in a
generator); vertices of ``V`` lying in no facet contribute ``x_v`` itself.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Optional

from .errors import InvalidComplexError, InvalidIdealError, InvalidInputError
from .ideal import MonomialIdeal, MonomialPrime, associated_primes, intersect_all, support


def _maximal(faces: Iterable[frozenset]) -> list[frozenset]:
    faces = sorted(set(faces), key=len, reverse=True)
    out: list[frozenset] = []
    for f in faces:
        if not any(f <= g for g in out):
            out.append(f)
    return out


def _face_key(f) -> tuple:
    return (len(f), tuple(sorted(f)))


@dataclass(frozen=True)
class SimplicialComplex:
    """Complex ``<F_1, ..., F_m>`` over an explicit vertex set.

    ``facets`` holds sorted tuples in a canonical order.  The complex with
    the single empty facet is allowed; the void complex is not.
    """

    vertices: tuple
    facets: tuple

    def __post_init__(self):
        verts = tuple(sorted(set(self.vertices)))
        for v in verts:
            if isinstance(v, bool) or not isinstance(v, int) or v < 1:
                raise InvalidComplexError(f"vertex labels must be positive integers, got {v!r}")
        faces = [frozenset(f) for f in self.facets]
        if not faces:
            raise InvalidComplexError("the void complex (no facets) is not supported")
        vset = set(verts)
        for f in faces:
            if not f <= vset:
                raise InvalidComplexError(
                    f"face {sorted(f)} is not contained in the vertex set {list(verts)}"
                )
        facets = tuple(tuple(sorted(f)) for f in sorted(_maximal(faces), key=_face_key))
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "facets", facets)

    @cached_property
    def facet_sets(self) -> tuple:
        return tuple(frozenset(f) for f in self.facets)

    @property
    def is_simplex(self) -> bool:
        return len(self.facets) == 1

    @property
    def dim(self) -> int:
        return max(len(f) for f in self.facets) - 1

    @property
    def used_vertices(self) -> tuple:
        return tuple(sorted(set().union(*self.facet_sets)))

    @property
    def is_pure(self) -> bool:
        return len({len(f) for f in self.facets}) == 1

    def __contains__(self, face) -> bool:
        face = frozenset(face)
        return any(face <= f for f in self.facet_sets)

    def faces(self) -> list[frozenset]:
        """Every face, including the empty one, in canonical order."""
        out = set()
        for f in self.facets:
            for k in range(len(f) + 1):
                out.update(frozenset(c) for c in combinations(f, k))
        return sorted(out, key=_face_key)

    def faces_by_size(self) -> dict[int, list[tuple]]:
        out: dict[int, set] = {}
        for f in self.facets:
            for k in range(len(f) + 1):
                out.setdefault(k, set()).update(combinations(f, k))
        return {k: sorted(v) for k, v in sorted(out.items())}

    def __str__(self) -> str:
        return "<" + ", ".join("{" + ",".join(map(str, f)) + "}" for f in self.facets) + ">"

    def to_json(self) -> dict:
        return {"vertices": list(self.vertices), "facets": [list(f) for f in self.facets]}

    @classmethod
    def from_json(cls, data) -> "SimplicialComplex":
        if not isinstance(data, dict) or "facets" not in data:
            raise InvalidInputError("complex: expected an object with field 'facets'")
        facets = data["facets"]
        if not isinstance(facets, list) or not all(isinstance(f, list) for f in facets):
            raise InvalidInputError("complex: 'facets' must be a list of vertex lists")
        vertices = data.get("vertices")
        if vertices is None:
            vertices = sorted({v for f in facets for v in f})
        return from_facets(vertices, facets)


def from_facets(vertex_set, faces) -> SimplicialComplex:
    """Build a complex; ``vertex_set`` may be an int ``n`` meaning ``{1..n}``."""
    if isinstance(vertex_set, int):
        vertex_set = range(1, vertex_set + 1)
    faces = list(faces)
    if not faces:
        raise InvalidComplexError("empty face list")
    return SimplicialComplex(tuple(vertex_set), tuple(tuple(f) for f in faces))


def simplex(vertices) -> SimplicialComplex:
    vertices = tuple(vertices)
    return SimplicialComplex(vertices, (vertices,))


# ---------------------------------------------------------------------------
# Stanley-Reisner correspondence

def stanley_reisner(delta: SimplicialComplex, n: Optional[int] = None) -> Optional[MonomialIdeal]:
    """``I_Delta`` as the intersection of the primes ``P_{V \\ F}`` over facets F.

    Returns ``None`` when the ideal is zero, i.e. ``delta`` is the full
    simplex on its vertex set.
    """
    n = max(delta.vertices) if n is None else n
    if delta.vertices and max(delta.vertices) > n:
        raise InvalidComplexError(f"vertex {max(delta.vertices)} exceeds ambient n={n}")
    verts = set(delta.vertices)
    primes = []
    for f in delta.facet_sets:
        comp = verts - f
        if not comp:
            return None
        primes.append(MonomialPrime(n, tuple(comp)).as_ideal())
    return intersect_all(primes)


def minimal_nonfaces(delta: SimplicialComplex) -> list[tuple]:
    I = stanley_reisner(delta)
    if I is None:
        return []
    return sorted((support(g) for g in I.gens), key=_face_key)


def complex_of_ideal(I: MonomialIdeal) -> SimplicialComplex:
    """Inverse of :func:`stanley_reisner` on the vertex set ``{1..n}``."""
    if not I.is_squarefree:
        raise InvalidIdealError("complex_of_ideal expects a squarefree ideal")
    verts = frozenset(range(1, I.n + 1))
    facets = [verts - set(p.variables) for p in associated_primes(I)]
    return SimplicialComplex(tuple(sorted(verts)), tuple(tuple(f) for f in facets))


# ---------------------------------------------------------------------------
# link, deletion, shedding vertices

def _require_vertex(delta: SimplicialComplex, v: int) -> None:
    if v not in delta.vertices:
        raise InvalidComplexError(f"unknown vertex {v}")
    if not any(v in f for f in delta.facet_sets):
        raise InvalidComplexError(f"vertex {v} lies in no face of the complex")


def link(delta: SimplicialComplex, v: int) -> SimplicialComplex:
    _require_vertex(delta, v)
    rest = tuple(u for u in delta.vertices if u != v)
    return SimplicialComplex(rest, tuple(tuple(f - {v}) for f in delta.facet_sets if v in f))


def deletion(delta: SimplicialComplex, v: int) -> SimplicialComplex:
    _require_vertex(delta, v)
    rest = tuple(u for u in delta.vertices if u != v)
    return SimplicialComplex(rest, tuple(tuple(f - {v}) for f in delta.facet_sets))


def link_and_deletion(delta: SimplicialComplex, v: int) -> tuple[SimplicialComplex, SimplicialComplex]:
    """Both are taken on the vertex set ``V \\ {v}``."""
    return link(delta, v), deletion(delta, v)


def face_link(delta: SimplicialComplex, face) -> SimplicialComplex:
    face = frozenset(face)
    if face not in delta:
        raise InvalidComplexError(f"{sorted(face)} is not a face")
    rest = tuple(u for u in delta.vertices if u not in face)
    return SimplicialComplex(rest, tuple(tuple(f - face) for f in delta.facet_sets if face <= f))


def is_shedding_vertex(delta: SimplicialComplex, v: int) -> bool:
    """Every facet of the deletion of ``v`` is a facet of ``delta``.

    Always false for a simplex.
    """
    facets = set(delta.facet_sets)
    return all(f in facets for f in deletion(delta, v).facet_sets)


def is_vertex_decomposable(delta: SimplicialComplex) -> tuple[bool, Optional[dict]]:
    """Recursive check; the witness is a nested dict naming each shedding vertex.

    Shedding vertices are tried in ascending order, so the witness is
    deterministic.  On failure the witness is ``None``.
    """
    memo: dict[tuple, Optional[dict]] = {}

    def visit(d: SimplicialComplex) -> Optional[dict]:
        key = d.facets
        if key in memo:
            return memo[key]
        if d.is_simplex:
            result: Optional[dict] = {"simplex": list(d.facets[0])}
        else:
            result = None
            for v in d.used_vertices:
                if not is_shedding_vertex(d, v):
                    continue
                lk, dl = link_and_deletion(d, v)
                wl = visit(lk)
                if wl is None:
                    continue
                wd = visit(dl)
                if wd is None:
                    continue
                result = {"shed": v, "link": wl, "del": wd}
                break
        memo[key] = result
        return result

    witness = visit(delta)
    return witness is not None, witness


def shedding_order(witness: dict) -> list[int]:
    """Pre-order list of shedding vertices from a witness tree."""
    if witness is None or "simplex" in witness:
        return []
    return [witness["shed"]] + shedding_order(witness["link"]) + shedding_order(witness["del"])


# ---------------------------------------------------------------------------
# constructions

def pure_skeleton(delta: SimplicialComplex, i: int) -> SimplicialComplex:
    """``Delta^[i]``: generated by the faces of cardinality ``i``."""
    if i < 0 or i > delta.dim + 1:
        raise InvalidComplexError(f"no faces of cardinality {i} (dimension {delta.dim})")
    faces = {c for f in delta.facets if len(f) >= i for c in combinations(f, i)}
    return SimplicialComplex(delta.vertices, tuple(sorted(faces)))


def skeleton(delta: SimplicialComplex, i: int) -> SimplicialComplex:
    """``Delta^(i)``: all faces of dimension at most ``i``."""
    if i < 0 or i > delta.dim:
        raise InvalidComplexError(f"skeleton index {i} outside 0..{delta.dim}")
    faces = set()
    for f in delta.facets:
        if len(f) <= i + 1:
            faces.add(f)
        else:
            faces.update(combinations(f, i + 1))
    return SimplicialComplex(delta.vertices, tuple(sorted(faces)))


def skeletons(delta: SimplicialComplex, i: int) -> tuple[SimplicialComplex, SimplicialComplex]:
    return pure_skeleton(delta, i), skeleton(delta, min(i, delta.dim))


def alexander_dual(delta: SimplicialComplex) -> SimplicialComplex:
    verts = frozenset(delta.vertices)
    nonfaces = minimal_nonfaces(delta)
    if not nonfaces:
        raise InvalidComplexError("the dual of a full simplex is void")
    return SimplicialComplex(delta.vertices, tuple(tuple(verts - set(f)) for f in nonfaces))


def join(a: SimplicialComplex, b: SimplicialComplex) -> SimplicialComplex:
    if set(a.vertices) & set(b.vertices):
        raise InvalidComplexError("join needs disjoint vertex sets")
    return SimplicialComplex(
        a.vertices + b.vertices,
        tuple(f + g for f in a.facets for g in b.facets),
    )
