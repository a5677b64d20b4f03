"""Ass-decomposable monomial ideals.

An ideal is ass-decomposable when it is primary, or when some ``x_i^k`` with
``x_i`` outside the radical satisfies

    ass(I + (x_i^k)) = {p in ass(I) : x_i in p}

and both ``I + (x_i^k)`` and ``I : x_i^k`` are again ass-decomposable.  The
search below returns a certificate tree for positive answers and a per-candidate
refutation for negative ones; :func:`verify_certificate` replays a
certificate independently of the search.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .errors import InvalidInputError, ResourceLimitError, TheoremViolation
from .homology import GF2, FieldSpec, homological_invariants
from .ideal import (
    MonomialIdeal,
    MonomialPrime,
    add_power,
    associated_primes,
    colon_power,
    ideal_sum,
    multiply,
    numeric_invariants,
    radical,
    variable_power,
)

MAX_MEMO = 200_000


# ---------------------------------------------------------------------------
# certificates

@dataclass(frozen=True)
class PrimaryLeaf:
    ideal: MonomialIdeal
    prime: MonomialPrime

    def to_json(self) -> dict:
        return {"primary": self.prime.to_json()}

    @property
    def depth(self) -> int:
        return 0


@dataclass(frozen=True)
class Split:
    ideal: MonomialIdeal
    var: int
    k: int
    plus: "Certificate"
    colon: "Certificate"

    def to_json(self) -> dict:
        return {"split": {"var": self.var, "k": self.k, "plus": self.plus.to_json(), "colon": self.colon.to_json()}}

    @property
    def depth(self) -> int:
        return 1 + max(self.plus.depth, self.colon.depth)


Certificate = Union[PrimaryLeaf, Split]


def split_chain(cert: Certificate) -> list[tuple[int, int]]:
    """Pre-order ``(var, k)`` list of a certificate."""
    if isinstance(cert, PrimaryLeaf):
        return []
    return [(cert.var, cert.k)] + split_chain(cert.plus) + split_chain(cert.colon)


@dataclass
class AssDecResult:
    ass_decomposable: bool
    certificate: Optional[Certificate] = None
    refutation: Optional[list] = None

    def __bool__(self) -> bool:
        return self.ass_decomposable

    def to_json(self) -> dict:
        out: dict = {"ass_decomposable": self.ass_decomposable}
        if self.certificate is not None:
            out["certificate"] = self.certificate.to_json()
        if self.refutation is not None:
            out["refutation"] = self.refutation
        return out


# ---------------------------------------------------------------------------
# the splitting condition

def _in_radical(I: MonomialIdeal, i: int) -> bool:
    return any(g[i - 1] and sum(g) == g[i - 1] for g in I.gens)


def _condition_mismatch(I: MonomialIdeal, i: int, k: int) -> Optional[dict]:
    """None when condition (i) holds for ``x_i^k``; otherwise a witness."""
    if _in_radical(I, i):
        return {"reason": "variable in radical"}
    lhs = set(associated_primes(add_power(I, i, k)))
    rhs = {p for p in associated_primes(I) if i in p}
    if lhs == rhs:
        return None
    witness = min(lhs ^ rhs, key=MonomialPrime.sort_key)
    side = "gained" if witness in lhs else "lost"
    return {"reason": "ass mismatch", "witness": witness.to_json(), "side": side}


def splitting_condition(I: MonomialIdeal, i: int, k: int) -> bool:
    """True iff ``x_i`` is outside ``sqrt(I)`` and ``ass(I + x_i^k)`` is the x_i-filter of ``ass(I)``."""
    if not 1 <= i <= I.n or k < 1:
        raise InvalidInputError(f"bad decomposing monomial x{i}^{k} for n={I.n}")
    return _condition_mismatch(I, i, k) is None


def _candidate_range(I: MonomialIdeal):
    # beyond the largest exponent of x_i in G(I) both branch ideals stop changing
    for i in range(1, I.n + 1):
        if _in_radical(I, i):
            continue
        for k in range(1, I.max_exponent(i) + 1):
            yield i, k


def decomposing_candidates(I: MonomialIdeal) -> list[tuple[int, int]]:
    """Every ``(i, k)`` satisfying the splitting condition, variables then exponents ascending."""
    return [(i, k) for i, k in _candidate_range(I) if _condition_mismatch(I, i, k) is None]


# ---------------------------------------------------------------------------
# recursive search

_IN_PROGRESS = object()


def is_ass_decomposable(I: MonomialIdeal, memo: Optional[dict] = None, max_memo: int = MAX_MEMO) -> AssDecResult:
    """Decide ass-decomposability, returning a certificate or a refutation.

    ``memo`` may be shared between calls; it maps ideals to a certificate or
    ``None`` (negative results are cached as well).
    """
    memo = {} if memo is None else memo

    def solve(J: MonomialIdeal) -> Optional[Certificate]:
        hit = memo.get(J, _IN_PROGRESS)
        if hit is not _IN_PROGRESS:
            return hit
        if len(memo) >= max_memo:
            raise ResourceLimitError(f"ass-decomposability memo exceeded {max_memo} ideals")
        primes = associated_primes(J)
        if len(primes) == 1:
            node: Optional[Certificate] = PrimaryLeaf(J, primes[0])
        else:
            node = None
            for i, k in decomposing_candidates(J):
                plus = solve(add_power(J, i, k))
                if plus is None:
                    continue
                colon = solve(colon_power(J, i, k))
                if colon is None:
                    continue
                node = Split(J, i, k, plus, colon)
                break
        memo[J] = node
        return node

    cert = solve(I)
    if cert is not None:
        return AssDecResult(True, certificate=cert)
    return AssDecResult(False, refutation=_refute(I, solve))


def _refute(I: MonomialIdeal, solve) -> list:
    tried = []
    for i, k in _candidate_range(I):
        entry = {"var": i, "k": k}
        mismatch = _condition_mismatch(I, i, k)
        if mismatch is not None:
            entry.update(mismatch)
        elif solve(add_power(I, i, k)) is None:
            entry["reason"] = "plus branch not ass-decomposable"
        else:
            entry["reason"] = "colon branch not ass-decomposable"
        tried.append(entry)
    return tried


def verify_certificate(I: MonomialIdeal, cert) -> bool:
    """Replay a certificate (object or JSON form) against ``I`` from scratch."""
    if not isinstance(cert, dict):
        cert = cert.to_json()
    if "primary" in cert:
        primes = associated_primes(I)
        if len(primes) != 1:
            return False
        vars_ = cert["primary"].get("vars")
        return vars_ is None or sorted(vars_) == list(primes[0].variables)
    if "split" not in cert:
        return False
    node = cert["split"]
    try:
        i, k = int(node["var"]), int(node["k"])
    except (KeyError, TypeError, ValueError):
        return False
    if not 1 <= i <= I.n or k < 1:
        return False
    # independent restatement of the condition: x_i not in sqrt(I), then compare ass sets
    if variable_power(I.n, i, 1) in radical(I):
        return False
    ass_plus = set(associated_primes(add_power(I, i, k)))
    if ass_plus != {p for p in associated_primes(I) if i in p.variables}:
        return False
    return verify_certificate(add_power(I, i, k), node["plus"]) and verify_certificate(
        colon_power(I, i, k), node["colon"]
    )


# ---------------------------------------------------------------------------
# depth and Cohen-Macaulay consequences

@dataclass(frozen=True)
class DepthReport:
    depth_formula: int
    depth_resolution: int
    agree: bool
    proven: bool

    def to_json(self) -> dict:
        return {
            "formula": self.depth_formula,
            "resolution": self.depth_resolution,
            "agree": self.agree,
            "status": "proven" if self.proven else "conjectural",
        }


def depth_report(I: MonomialIdeal, field: FieldSpec = GF2, result: Optional[AssDecResult] = None) -> DepthReport:
    """Compare ``n - bigh(I)`` with the depth read off the Betti table.

    Raises TheoremViolation when ``I`` is certified ass-decomposable and the
    two numbers differ.
    """
    result = is_ass_decomposable(I) if result is None else result
    formula = I.n - numeric_invariants(I).bigh
    resolved = homological_invariants(I, field).depth_RmodI
    report = DepthReport(formula, resolved, formula == resolved, result.ass_decomposable)
    if report.proven and not report.agree:
        raise TheoremViolation(f"depth {resolved} != n - bigh = {formula} for certified ideal {I}")
    return report


@dataclass(frozen=True)
class UnmixedConsequences:
    is_unmixed: bool
    cm_verdict: Optional[bool]
    radical_ass_decomposable: Optional[bool]

    def to_json(self) -> dict:
        if not self.is_unmixed:
            return {"is_unmixed": False, "cm_verdict": "not applicable", "radical_ass_decomposable": "not applicable"}
        return {
            "is_unmixed": True,
            "cm_verdict": self.cm_verdict,
            "radical_ass_decomposable": self.radical_ass_decomposable,
        }


def unmixed_consequences(I: MonomialIdeal, field: FieldSpec = GF2, result: Optional[AssDecResult] = None) -> UnmixedConsequences:
    result = is_ass_decomposable(I) if result is None else result
    if not result:
        raise InvalidInputError("unmixed_consequences needs an ass-decomposable ideal")
    inv = numeric_invariants(I)
    if not inv.unmixed:
        return UnmixedConsequences(False, None, None)
    cm = homological_invariants(I, field).depth_RmodI == inv.krull_dim
    rad = is_ass_decomposable(radical(I)).ass_decomposable
    if not cm:
        raise TheoremViolation(f"unmixed ass-decomposable ideal {I} is not Cohen-Macaulay")
    if not rad:
        raise TheoremViolation(f"radical of unmixed ass-decomposable ideal {I} is not ass-decomposable")
    return UnmixedConsequences(True, cm, rad)


# ---------------------------------------------------------------------------
# regularity

@dataclass(frozen=True)
class RegularityStructure:
    prime: Optional[MonomialPrime]  # None stands for the zero ideal
    variable: int
    J: MonomialIdeal

    def to_json(self) -> dict:
        return {
            "prime": {"vars": list(self.prime.variables) if self.prime else []},
            "variable": self.variable,
            "J": self.J.to_json(),
        }


@dataclass(frozen=True)
class RegularityReport:
    r: int
    d_of_I: int
    reg_RmodI: int
    bound_holds: bool
    equality: bool
    structure: Optional[RegularityStructure]

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "d_of_I": self.d_of_I,
            "reg_RmodI": self.reg_RmodI,
            "bound_holds": self.bound_holds,
            "equality": self.equality,
            "structure": self.structure.to_json() if self.structure else None,
        }


def regularity_report(I: MonomialIdeal, field: FieldSpec = GF2, result: Optional[AssDecResult] = None) -> RegularityReport:
    """Check ``reg(R/I) <= r - 1`` and ``reg(R/I) = r - 1 <=> d(I) = r``.

    When equality holds, ``I`` is split as ``p + x*J`` using the root
    decomposing variable ``x``; ``p`` may be the zero ideal (then ``I = x*J``).
    """
    if not I.is_squarefree:
        raise InvalidInputError("regularity_report expects a squarefree ideal")
    result = is_ass_decomposable(I) if result is None else result
    if not result:
        raise InvalidInputError("regularity_report needs an ass-decomposable ideal")
    inv = numeric_invariants(I)
    r, d = inv.index_r, inv.d_of_I
    reg = homological_invariants(I, field).reg_RmodI
    bound = reg <= r - 1
    if not bound:
        raise TheoremViolation(f"reg(R/I) = {reg} exceeds r - 1 = {r - 1} for {I}")
    equality = reg == r - 1
    if equality != (d == r):
        raise TheoremViolation(f"reg(R/I) = r - 1 is {equality} but d(I) = r is {d == r} for {I}")
    structure = None
    if equality and isinstance(result.certificate, Split):
        structure = _equality_structure(I, result.certificate.var)
    return RegularityReport(r, d, reg, bound, equality, structure)


def _equality_structure(I: MonomialIdeal, x: int) -> RegularityStructure:
    containing = [p for p in associated_primes(I) if x in p]
    if len(containing) != 1:
        raise TheoremViolation(f"x{x} lies in {len(containing)} minimal primes of {I}, expected exactly one")
    last = containing[0]
    rest = tuple(v for v in last.variables if v != x)
    prime = MonomialPrime(I.n, rest) if rest else None
    colon = colon_power(I, x, 1)
    linear = {variable_power(I.n, v, 1) for v in rest}
    j_gens = tuple(g for g in colon.gens if g not in linear)
    if not j_gens:
        raise TheoremViolation(f"I : x{x} is the prime {prime}; no J with I = p + x*J")
    J = MonomialIdeal(I.n, j_gens)
    if set(J.support()) & set(last.variables):
        raise TheoremViolation(f"J = {J} meets the variables of {last}")
    rebuilt = multiply(J, variable_power(I.n, x, 1))
    if prime is not None:
        rebuilt = ideal_sum(prime.as_ideal(), rebuilt)
    if rebuilt != I:
        raise TheoremViolation(f"{I} != p + x{x}*J with p = {prime}, J = {J}")
    if not is_ass_decomposable(J):
        raise TheoremViolation(f"J = {J} is not ass-decomposable")
    return RegularityStructure(prime, x, J)
