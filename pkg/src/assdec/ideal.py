"""Monomial ideals: canonical forms, arithmetic and irreducible decomposition.

Monomials are exponent tuples of length ``n``.  Variable indices are 1-based
in every public function, matching ``x_1, ..., x_n``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache, reduce
from itertools import combinations_with_replacement
from typing import Iterable, Sequence

from .errors import AmbientMismatchError, InvalidIdealError, InvalidInputError

MAX_VARIABLES = 64
MAX_EXPONENT = 2**31 - 1

Monomial = tuple  # tuple[int, ...]


# ---------------------------------------------------------------------------
# monomial helpers

def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x if x >= y else y for x, y in zip(a, b))


def gcd(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x if x <= y else y for x, y in zip(a, b))


def degree(m: Monomial) -> int:
    return sum(m)


def support(m: Monomial) -> tuple[int, ...]:
    """1-based indices of the variables occurring in ``m``."""
    return tuple(i + 1 for i, e in enumerate(m) if e)


def support_monomial(m: Monomial) -> Monomial:
    return tuple(1 if e else 0 for e in m)


def variable_power(n: int, i: int, k: int) -> Monomial:
    m = [0] * n
    m[i - 1] = k
    return tuple(m)


def is_pure_power(m: Monomial) -> bool:
    return sum(1 for e in m if e) == 1


def grevlex_key(m: Monomial):
    # ascending grevlex: degree first, ties broken on the last variable,
    # smaller last exponent is larger
    return (sum(m), tuple(-e for e in reversed(m)))


def format_monomial(m: Monomial) -> str:
    parts = []
    for i, e in enumerate(m, start=1):
        if e == 1:
            parts.append(f"x{i}")
        elif e:
            parts.append(f"x{i}^{e}")
    return "*".join(parts) or "1"


def _check_monomial(m, n: int) -> Monomial:
    try:
        m = tuple(m)
    except TypeError:
        raise InvalidIdealError(f"monomial must be an exponent vector, got {m!r}")
    if len(m) != n:
        raise InvalidIdealError(f"exponent vector {list(m)} has length {len(m)}, expected {n}")
    for e in m:
        if isinstance(e, bool) or not isinstance(e, int):
            raise InvalidIdealError(f"non-integer exponent in {list(m)}")
        if e < 0 or e > MAX_EXPONENT:
            raise InvalidIdealError(f"exponent out of range in {list(m)}")
    return m


def _minimal_generators(gens: Iterable[Monomial]) -> tuple[Monomial, ...]:
    # after sorting by degree a monomial can only be divided by an earlier one
    out: list[Monomial] = []
    for m in sorted(set(gens), key=grevlex_key):
        if not any(divides(g, m) for g in out):
            out.append(m)
    return tuple(out)


# ---------------------------------------------------------------------------
# types

@dataclass(frozen=True)
class MonomialIdeal:
    """A nonzero proper monomial ideal stored by its minimal generators.

    Construction always canonicalizes: redundant generators are dropped and
    the rest sorted in ascending grevlex order, so two ideals are equal iff
    their ``gens`` tuples are equal.
    """

    n: int
    gens: tuple

    def __post_init__(self):
        n = self.n
        if isinstance(n, bool) or not isinstance(n, int) or n < 1:
            raise InvalidIdealError(f"ambient dimension must be a positive integer, got {n!r}")
        if n > MAX_VARIABLES:
            raise InvalidIdealError(f"at most {MAX_VARIABLES} variables are supported, got {n}")
        raw = [_check_monomial(m, n) for m in self.gens]
        if not raw:
            raise InvalidIdealError("the zero ideal is not supported (empty generator list)")
        if any(not any(m) for m in raw):
            raise InvalidIdealError("the unit ideal is not supported (unit generator)")
        object.__setattr__(self, "gens", _minimal_generators(raw))

    # -- queries ---------------------------------------------------------
    def __contains__(self, m: Monomial) -> bool:
        return any(divides(g, m) for g in self.gens)

    def __iter__(self):
        return iter(self.gens)

    def __len__(self) -> int:
        return len(self.gens)

    def __str__(self) -> str:
        return "(" + ", ".join(format_monomial(g) for g in self.gens) + ")"

    def issubset(self, other: "MonomialIdeal") -> bool:
        _same_ambient(self, other)
        return all(g in other for g in self.gens)

    @property
    def is_squarefree(self) -> bool:
        return all(e <= 1 for g in self.gens for e in g)

    def max_exponent(self, i: int) -> int:
        return max(g[i - 1] for g in self.gens)

    def support(self) -> tuple[int, ...]:
        return tuple(sorted({v for g in self.gens for v in support(g)}))

    # -- serialization ---------------------------------------------------
    def to_json(self) -> dict:
        return {"n": self.n, "gens": [list(g) for g in self.gens]}

    @classmethod
    def from_json(cls, data) -> "MonomialIdeal":
        if not isinstance(data, dict):
            raise InvalidInputError("ideal: expected an object with fields 'n' and 'gens'")
        for key in ("n", "gens"):
            if key not in data:
                raise InvalidInputError(f"ideal: missing field '{key}'")
        if not isinstance(data["gens"], list):
            raise InvalidInputError("ideal: field 'gens' must be a list of exponent vectors")
        return cls(data["n"], tuple(tuple(g) if isinstance(g, list) else g for g in data["gens"]))


@dataclass(frozen=True, order=True)
class MonomialPrime:
    """The prime ideal generated by a nonempty set of variables."""

    n: int
    variables: tuple

    def __post_init__(self):
        vs = tuple(sorted(set(self.variables)))
        if not vs:
            raise InvalidIdealError("a monomial prime needs at least one variable")
        if vs[0] < 1 or vs[-1] > self.n:
            raise InvalidIdealError(f"prime variables {list(vs)} outside 1..{self.n}")
        object.__setattr__(self, "variables", vs)

    @property
    def height(self) -> int:
        return len(self.variables)

    def __contains__(self, i: int) -> bool:
        return i in self.variables

    def issubset(self, other: "MonomialPrime") -> bool:
        return set(self.variables) <= set(other.variables)

    def as_ideal(self) -> MonomialIdeal:
        return MonomialIdeal(self.n, tuple(variable_power(self.n, i, 1) for i in self.variables))

    def sort_key(self):
        return (len(self.variables), self.variables)

    def __str__(self) -> str:
        return "(" + ", ".join(f"x{i}" for i in self.variables) + ")"

    def to_json(self) -> dict:
        return {"vars": list(self.variables)}

    @classmethod
    def from_json(cls, data, n: int) -> "MonomialPrime":
        if not isinstance(data, dict) or "vars" not in data:
            raise InvalidInputError("prime: expected an object with field 'vars'")
        return cls(n, tuple(data["vars"]))


@dataclass(frozen=True)
class IrreducibleComponent:
    """Ideal generated by pure powers ``x_i^e``; ``powers`` is sorted (i, e) pairs."""

    n: int
    powers: tuple

    def __post_init__(self):
        pw = tuple(sorted(dict(self.powers).items()))
        if not pw:
            raise InvalidIdealError("an irreducible component needs at least one pure power")
        for i, e in pw:
            if not 1 <= i <= self.n or e < 1:
                raise InvalidIdealError(f"bad pure power x{i}^{e} for n={self.n}")
        object.__setattr__(self, "powers", pw)

    @property
    def radical(self) -> MonomialPrime:
        return MonomialPrime(self.n, tuple(i for i, _ in self.powers))

    def __contains__(self, m: Monomial) -> bool:
        return any(m[i - 1] >= e for i, e in self.powers)

    def issubset(self, other: "IrreducibleComponent") -> bool:
        return all(variable_power(self.n, i, e) in other for i, e in self.powers)

    def as_ideal(self) -> MonomialIdeal:
        return MonomialIdeal(self.n, tuple(variable_power(self.n, i, e) for i, e in self.powers))

    def sort_key(self):
        return (len(self.powers), tuple(i for i, _ in self.powers), tuple(e for _, e in self.powers))

    def __str__(self) -> str:
        return "(" + ", ".join(f"x{i}" if e == 1 else f"x{i}^{e}" for i, e in self.powers) + ")"

    def to_json(self) -> dict:
        return {"powers": {str(i): e for i, e in self.powers}}

    @classmethod
    def from_json(cls, data, n: int) -> "IrreducibleComponent":
        if not isinstance(data, dict) or not isinstance(data.get("powers"), dict):
            raise InvalidInputError("component: expected an object with field 'powers'")
        try:
            powers = tuple((int(k), v) for k, v in data["powers"].items())
        except ValueError:
            raise InvalidInputError("component: 'powers' keys must be variable indices")
        return cls(n, powers)


@dataclass(frozen=True)
class IdealInvariants:
    height: int
    bigh: int
    krull_dim: int
    unmixed: bool
    index_r: int
    d_of_I: int

    def to_json(self) -> dict:
        return {
            "height": self.height,
            "bigh": self.bigh,
            "krull_dim": self.krull_dim,
            "unmixed": self.unmixed,
            "index_r": self.index_r,
            "d_of_I": self.d_of_I,
        }


# ---------------------------------------------------------------------------
# operations

def minimalize(raw: Sequence[Monomial], n: int) -> MonomialIdeal:
    return MonomialIdeal(n, tuple(raw))


def _same_ambient(I: MonomialIdeal, J: MonomialIdeal) -> None:
    if I.n != J.n:
        raise AmbientMismatchError(f"ambient mismatch: {I.n} vs {J.n} variables")


def _check_var(I: MonomialIdeal, i: int, k: int = 1) -> None:
    if not 1 <= i <= I.n:
        raise InvalidIdealError(f"variable index {i} outside 1..{I.n}")
    if k < 1:
        raise InvalidIdealError(f"exponent must be positive, got {k}")


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ambient(I, J)
    return MonomialIdeal(I.n, tuple(lcm(u, v) for u in I.gens for v in J.gens))


def intersect_all(ideals: Iterable[MonomialIdeal]) -> MonomialIdeal:
    return reduce(intersect, ideals)


def ideal_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ambient(I, J)
    return MonomialIdeal(I.n, I.gens + J.gens)


def multiply(I: MonomialIdeal, m: Monomial) -> MonomialIdeal:
    return MonomialIdeal(I.n, tuple(tuple(a + b for a, b in zip(g, m)) for g in I.gens))


def add_power(I: MonomialIdeal, i: int, k: int) -> MonomialIdeal:
    """The ideal ``I + (x_i^k)``."""
    _check_var(I, i, k)
    return MonomialIdeal(I.n, I.gens + (variable_power(I.n, i, k),))


def colon_power(I: MonomialIdeal, i: int, k: int) -> MonomialIdeal:
    """The colon ideal ``I : x_i^k``.

    Raises InvalidIdealError if ``x_i^k`` already lies in ``I`` (the colon
    would be the unit ideal).
    """
    _check_var(I, i, k)
    j = i - 1
    out = []
    for g in I.gens:
        h = list(g)
        h[j] = max(0, h[j] - k)
        out.append(tuple(h))
    return MonomialIdeal(I.n, tuple(out))


def radical(I: MonomialIdeal) -> MonomialIdeal:
    return MonomialIdeal(I.n, tuple(support_monomial(g) for g in I.gens))


def _split_decompose(gens: tuple, n: int, memo: dict) -> frozenset:
    hit = memo.get(gens)
    if hit is not None:
        return hit
    pivot = next((g for g in gens if not is_pure_power(g)), None)
    if pivot is None:
        # only pure powers left; minimality leaves one per variable
        powers = tuple((support(g)[0], sum(g)) for g in gens)
        result = frozenset([IrreducibleComponent(n, powers)])
    else:
        j = next(idx for idx, e in enumerate(pivot) if e)
        first = tuple(e if idx == j else 0 for idx, e in enumerate(pivot))
        rest = tuple(0 if idx == j else e for idx, e in enumerate(pivot))
        left = _minimal_generators(gens + (first,))
        right = _minimal_generators(gens + (rest,))
        result = _split_decompose(left, n, memo) | _split_decompose(right, n, memo)
    memo[gens] = result
    return result


def irreducible_decomposition(I: MonomialIdeal) -> list[IrreducibleComponent]:
    """Irredundant irreducible components of ``I`` in a fixed order.

    Splits on the first non-pure-power generator ``u = x_i^e * w`` into
    ``I + (x_i^e)`` and ``I + (w)``, then keeps the inclusion-minimal
    components.
    """
    return list(_irreducible_components(I))


# values are immutable tuples, so sharing the cache across threads is safe
@lru_cache(maxsize=1 << 16)
def _irreducible_components(I: MonomialIdeal) -> tuple:
    candidates = sorted(_split_decompose(I.gens, I.n, {}), key=IrreducibleComponent.sort_key)
    # for irreducible monomial ideals, "intersection of the others is inside q"
    # holds iff some other single component is inside q
    kept = []
    for q in candidates:
        if not any(p is not q and p.issubset(q) for p in candidates):
            kept.append(q)
    return tuple(kept)


def associated_primes(I: MonomialIdeal) -> list[MonomialPrime]:
    primes = {q.radical for q in irreducible_decomposition(I)}
    return sorted(primes, key=MonomialPrime.sort_key)


def minimal_primes(I: MonomialIdeal) -> list[MonomialPrime]:
    ass = associated_primes(I)
    return [p for p in ass if not any(q != p and q.issubset(p) for q in ass)]


def numeric_invariants(I: MonomialIdeal) -> IdealInvariants:
    comps = irreducible_decomposition(I)
    heights = {q.radical.height for q in comps}
    return IdealInvariants(
        height=min(heights),
        bigh=max(heights),
        krull_dim=I.n - min(heights),
        unmixed=len(heights) == 1,
        index_r=len(comps),
        d_of_I=max(degree(g) for g in I.gens),
    )


def is_primary(I: MonomialIdeal) -> bool:
    return len(associated_primes(I)) == 1


def prime_power(p: MonomialPrime, k: int) -> MonomialIdeal:
    gens = []
    for combo in combinations_with_replacement(p.variables, k):
        m = [0] * p.n
        for i in combo:
            m[i - 1] += 1
        gens.append(tuple(m))
    return MonomialIdeal(p.n, tuple(gens))


def symbolic_power(I: MonomialIdeal, k: int) -> MonomialIdeal:
    """``I^(k)``: intersection of the k-th powers of the minimal primes of ``I``."""
    if not I.is_squarefree:
        raise InvalidIdealError("symbolic_power expects a squarefree ideal")
    if k < 1:
        raise InvalidIdealError(f"symbolic power exponent must be positive, got {k}")
    return intersect_all(prime_power(p, k) for p in associated_primes(I))


def ideal_from_components(components: Iterable) -> MonomialIdeal:
    """Intersect components given as IrreducibleComponent, MonomialPrime or MonomialIdeal."""
    ideals = []
    for c in components:
        ideals.append(c if isinstance(c, MonomialIdeal) else c.as_ideal())
    return intersect_all(ideals)


def parse_ideal(text: str, n: int) -> MonomialIdeal:
    """Parse ``"x1*x3^2, x2*x4"`` into an ideal; handy in tests and the CLI."""
    gens = []
    for chunk in text.split(","):
        m = [0] * n
        for factor in chunk.strip().split("*"):
            factor = factor.strip()
            if not factor.startswith("x"):
                raise InvalidInputError(f"cannot parse factor {factor!r}")
            var, _, exp = factor[1:].partition("^")
            i = int(var)
            if not 1 <= i <= n:
                raise InvalidInputError(f"variable x{i} outside 1..{n}")
            m[i - 1] += int(exp) if exp else 1
        gens.append(tuple(m))
    return MonomialIdeal(n, tuple(gens))
