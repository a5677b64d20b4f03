"""Seeded property campaigns cross-checking the theorems on random instances.

Each campaign returns a :class:`CampaignResult`; a nonzero ``failures``
count means some instance contradicted the statement being checked.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from .complex import (
    SimplicialComplex,
    is_shedding_vertex,
    is_vertex_decomposable,
    link_and_deletion,
    stanley_reisner,
)
from .decomposability import (
    depth_report,
    is_ass_decomposable,
    regularity_report,
    unmixed_consequences,
)
from .errors import InvalidInputError, TheoremViolation
from .graphs import edge_ideal, independence_complex, is_chordal, is_star, random_chordal, star
from .homology import (
    GF2,
    FieldSpec,
    betti_table,
    homological_invariants,
    invariants_from_table,
    is_cohen_macaulay,
    is_cohen_macaulay_by_depth,
    is_sequentially_cm,
)
from .ideal import (
    IrreducibleComponent,
    MonomialIdeal,
    add_power,
    associated_primes,
    colon_power,
    ideal_from_components,
    intersect,
    numeric_invariants,
    parse_ideal,
    symbolic_power,
)


@dataclass
class CampaignResult:
    campaign: str
    seed: int
    checked: int = 0
    failures: int = 0
    details: list = field(default_factory=list)
    stats: dict = field(default_factory=dict)

    def fail(self, **info) -> None:
        self.failures += 1
        if len(self.details) < 20:
            self.details.append(info)

    def to_json(self) -> dict:
        return {
            "campaign": self.campaign,
            "seed": self.seed,
            "checked": self.checked,
            "failures": self.failures,
            "failure_details": self.details,
            "stats": self.stats,
        }


# ---------------------------------------------------------------------------
# random instances

def random_complex(rng: random.Random, n: int, all_vertices: bool = False) -> SimplicialComplex:
    """Random complex on ``{1..n}`` generated by a few random faces.

    With ``all_vertices`` every vertex lies in some facet, so the
    Stanley-Reisner ideal has no linear generators.
    """
    verts = list(range(1, n + 1))
    faces = []
    # facet sizes cluster around a random target so that non-shellable,
    # non-CM examples show up often enough
    target = rng.randint(1, max(1, n - 2))
    for _ in range(rng.randint(1, max(2, n))):
        size = min(n - 1, max(1, target + rng.choice((-1, 0, 0, 1))))
        faces.append(tuple(sorted(rng.sample(verts, size))))
    if all_vertices:
        used = {v for f in faces for v in f}
        faces.extend((v,) for v in verts if v not in used)
    return SimplicialComplex(tuple(verts), tuple(faces))


def random_monomial_ideal(rng: random.Random, n: int, max_gens: int = 10, max_exp: int = 3) -> MonomialIdeal:
    gens = []
    for _ in range(rng.randint(1, max_gens)):
        m = [0] * n
        for j in rng.sample(range(n), rng.randint(1, min(3, n))):
            m[j] = rng.randint(1, max_exp)
        gens.append(tuple(m))
    return MonomialIdeal(n, tuple(gens))


def random_component_ideal(rng: random.Random, n: int, max_exp: int = 3, equal_height: bool = False) -> MonomialIdeal:
    """Intersection of 2-4 random irreducible components."""
    h = rng.randint(1, min(3, n))
    comps = []
    for _ in range(rng.randint(2, 4)):
        size = h if equal_height else rng.randint(1, min(3, n))
        vs = rng.sample(range(1, n + 1), size)
        comps.append(IrreducibleComponent(n, tuple((v, rng.randint(1, max_exp)) for v in vs)))
    return ideal_from_components(comps)


def random_ideal(rng: random.Random, max_n: int = 6, max_gens: int = 10, max_exp: int = 3) -> MonomialIdeal:
    """Mixture of random-generator and random-component ideals within the size caps."""
    while True:
        n = rng.randint(2, max_n)
        roll = rng.random()
        if roll < 0.5:
            I = random_monomial_ideal(rng, n, max_gens, max_exp)
        else:
            I = random_component_ideal(rng, n, max_exp, equal_height=roll < 0.75)
        if len(I.gens) <= max_gens:
            return I


# ---------------------------------------------------------------------------
# campaigns

def shedding_campaign(count: int = 100, seed: int = 0, max_vertices: int = 8, field: FieldSpec = GF2) -> CampaignResult:
    """Combinatorial shedding vertex <=> the ass-filter condition on ``I_Delta + (x_v)``."""
    rng = random.Random(seed)
    res = CampaignResult("shedding", seed)
    vertex_checks = shedding = 0
    while res.checked < count:
        delta = random_complex(rng, rng.randint(2, max_vertices))
        I = stanley_reisner(delta)
        if I is None:
            continue
        res.checked += 1
        ass = associated_primes(I)
        for v in delta.used_vertices:
            combinatorial = is_shedding_vertex(delta, v)
            algebraic = set(associated_primes(add_power(I, v, 1))) == {p for p in ass if v in p}
            vertex_checks += 1
            shedding += combinatorial
            if combinatorial != algebraic:
                res.fail(complex=delta.to_json(), vertex=v, combinatorial=combinatorial, algebraic=algebraic)
    res.stats = {"vertex_checks": vertex_checks, "shedding_vertices": shedding}
    return res


def depth_campaign(count: int = 100, seed: int = 0, field: FieldSpec = GF2, collect: list | None = None) -> CampaignResult:
    """``depth R/I = n - bigh(I)`` for certified ass-decomposable ideals.

    Certified ideals are appended to ``collect`` when given.
    """
    rng = random.Random(seed)
    res = CampaignResult("depth", seed)
    sampled = nonprimary = 0
    while res.checked < count:
        I = random_ideal(rng)
        sampled += 1
        result = is_ass_decomposable(I)
        if not result:
            continue
        res.checked += 1
        nonprimary += len(associated_primes(I)) > 1
        if collect is not None:
            collect.append(I)
        report = depth_report(I, field, result=result)
        if not report.agree:
            res.fail(ideal=I.to_json(), formula=report.depth_formula, resolution=report.depth_resolution)
    res.stats = {"sampled": sampled, "non_primary": nonprimary}
    return res


def decomposable_campaign(count: int = 100, seed: int = 0, max_vertices: int = 7, field: FieldSpec = GF2) -> CampaignResult:
    """Vertex decomposable <=> Stanley-Reisner ideal ass-decomposable."""
    rng = random.Random(seed)
    res = CampaignResult("decomposable", seed)
    vd_count = 0
    while res.checked < count:
        delta = random_complex(rng, rng.randint(2, max_vertices), all_vertices=True)
        I = stanley_reisner(delta)
        if I is None or min(sum(g) for g in I.gens) < 2:
            continue
        res.checked += 1
        vd, _ = is_vertex_decomposable(delta)
        ad = is_ass_decomposable(I).ass_decomposable
        vd_count += vd
        if vd != ad:
            res.fail(complex=delta.to_json(), vertex_decomposable=vd, ass_decomposable=ad)
    res.stats = {"vertex_decomposable": vd_count}
    return res


def shedding_scm_campaign(count: int = 30, seed: int = 0, max_vertices: int = 7, field: FieldSpec = GF2, max_attempts: int = 20000) -> CampaignResult:
    """Shedding vertex with sequentially CM link and deletion.

    Checks that the complex is sequentially CM and that
    ``depth R/I = n - bigh(I) = min(depth R/(I:x_v), depth R/(I,x_v))``.
    """
    rng = random.Random(seed)
    res = CampaignResult("shedding-scm", seed)
    attempts = 0
    while res.checked < count and attempts < max_attempts:
        attempts += 1
        n = rng.randint(3, max_vertices)
        delta = random_complex(rng, n)
        I = stanley_reisner(delta)
        if I is None or delta.is_simplex:
            continue
        v = _qualifying_vertex(delta, field)
        if v is None:
            continue
        res.checked += 1
        scm = is_sequentially_cm(delta, field)
        depth = homological_invariants(I, field).depth_RmodI
        formula = n - numeric_invariants(I).bigh
        branch = min(
            homological_invariants(colon_power(I, v, 1), field).depth_RmodI,
            homological_invariants(add_power(I, v, 1), field).depth_RmodI,
        )
        if not (scm and depth == formula == branch):
            res.fail(complex=delta.to_json(), vertex=v, scm=scm, depth=depth, formula=formula, branch_min=branch)
    res.stats = {"attempts": attempts}
    return res


def _qualifying_vertex(delta: SimplicialComplex, field: FieldSpec):
    for v in delta.used_vertices:
        if not is_shedding_vertex(delta, v):
            continue
        lk, dl = link_and_deletion(delta, v)
        if is_sequentially_cm(lk, field) and is_sequentially_cm(dl, field):
            return v
    return None


def chordal_campaign(count: int = 50, seed: int = 0, max_vertices: int = 8, field: FieldSpec = GF2) -> CampaignResult:
    """Chordal graphs: depth formula, regularity bound and the star trichotomy."""
    rng = random.Random(seed)
    res = CampaignResult("chordal", seed)
    stars = 0
    for _ in range(count):
        G = random_chordal(rng.randint(2, max_vertices), seed=rng.randrange(2**32))
        res.checked += 1
        problems = _check_chordal_instance(G, field)
        stars += is_star(G)
        if problems:
            res.fail(graph=G.to_json(), problems=problems)
    problems = _check_chordal_instance(star(4), field)
    res.checked += 1
    if problems:
        res.fail(graph=star(4).to_json(), problems=problems)
    res.stats = {"stars": stars + 1}
    return res


def _check_chordal_instance(G, field: FieldSpec) -> list:
    problems = []
    if not is_chordal(G)[0]:
        problems.append("generator produced a non-chordal graph")
    if not is_vertex_decomposable(independence_complex(G))[0]:
        problems.append("independence complex not vertex decomposable")
    I = edge_ideal(G)
    result = is_ass_decomposable(I)
    if not result:
        problems.append("edge ideal not ass-decomposable")
        return problems
    inv = numeric_invariants(I)
    table = betti_table(I, field)
    hom = invariants_from_table(table)
    if hom.depth_RmodI != I.n - inv.bigh:
        problems.append(f"depth {hom.depth_RmodI} != n - bigh {I.n - inv.bigh}")
    r = inv.index_r
    if hom.reg_RmodI > r - 1:
        problems.append(f"reg {hom.reg_RmodI} > r - 1 = {r - 1}")
    flags = (hom.reg_RmodI == r - 1, r == 2, is_star(G))
    if len(set(flags)) != 1:
        problems.append(f"reg=r-1 / r=2 / star disagree: {flags}")
    if is_star(G):
        if not all(j == i + 2 for i, j in table.coarse):
            problems.append("star edge ideal has a non-linear resolution")
        if hom.reg_RmodI != 1:
            problems.append(f"star reg(R/I) = {hom.reg_RmodI}")
    try:
        regularity_report(I, field, result=result)
    except TheoremViolation as exc:
        problems.append(str(exc))
    return problems


def radical_campaign(count: int = 100, seed: int = 0, field: FieldSpec = GF2) -> CampaignResult:
    """Unmixed certified ideals (drawn as in :func:`depth_campaign`) have ass-decomposable radicals and are CM."""
    certified: list[MonomialIdeal] = []
    depth_campaign(count, seed, field, collect=certified)
    res = CampaignResult("radical", seed)
    for I in certified:
        if not numeric_invariants(I).unmixed:
            continue
        res.checked += 1
        try:
            unmixed_consequences(I, field)
        except TheoremViolation as exc:
            res.fail(ideal=I.to_json(), error=str(exc))
    res.stats = {"certified": len(certified), "unmixed": res.checked}
    return res


SYMBOLIC_CURATED = [
    ("x1,x2", "x3,x4"),
    ("x1,x2", "x3,x4,x5"),
    ("x1,x2,x3", "x3,x4,x5"),
    ("x1,x2,x3", "x2,x4,x5"),
    ("x1,x2", "x3,x4", "x5,x6"),
]

# minimal primes that share variables, or have height one; here the symbolic
# powers do split, already with exponent one
SYMBOLIC_FLAGGED = [
    ("x1,x2", "x2,x3"),
    ("x1,x2", "x1,x3", "x2,x3"),
    ("x1", "x2"),
]


def _ideal_of_primes(primes) -> MonomialIdeal:
    n = max(int(t.strip()[1:]) for p in primes for t in p.split(","))
    ideals = [parse_ideal(p, n) for p in primes]
    I = ideals[0]
    for J in ideals[1:]:
        I = intersect(I, J)
    return I


def curated_symbolic_ideals() -> list[MonomialIdeal]:
    return [_ideal_of_primes(p) for p in SYMBOLIC_CURATED]


def primes_well_separated(I: MonomialIdeal) -> bool:
    """At least two minimal primes, each having two variables outside every other one."""
    primes = [set(p.variables) for p in associated_primes(I)]
    return len(primes) >= 2 and all(len(a - b) >= 2 for a in primes for b in primes if a is not b)


def symbolic_campaign(count: int = 0, seed: int = 0, field: FieldSpec = GF2, powers=(2, 3)) -> CampaignResult:
    """Symbolic powers ``I^(k)``, ``k >= 2``, are not ass-decomposable.

    Asserted for squarefree ideals whose minimal primes are well separated
    (see :func:`primes_well_separated`); ``count`` adds that many random
    Stanley-Reisner ideals of this kind to the curated list.  Ideals whose
    primes overlap, where the statement fails, are evaluated and reported
    under ``stats["flagged"]`` without counting as failures.
    """
    rng = random.Random(seed)
    ideals = curated_symbolic_ideals()
    extra = 0
    while extra < count:
        delta = random_complex(rng, rng.randint(4, 6), all_vertices=True)
        I = stanley_reisner(delta)
        if I is None or not primes_well_separated(I):
            continue
        ideals.append(I)
        extra += 1
    res = CampaignResult("symbolic", seed)
    for I in ideals:
        for k in powers:
            res.checked += 1
            if is_ass_decomposable(symbolic_power(I, k)):
                res.fail(ideal=I.to_json(), k=k)
    flagged = []
    for primes in SYMBOLIC_FLAGGED:
        I = _ideal_of_primes(primes)
        for k in powers:
            result = is_ass_decomposable(symbolic_power(I, k))
            flagged.append({"ideal": I.to_json(), "k": k, "ass_decomposable": result.ass_decomposable})
    res.stats = {"flagged": flagged}
    return res


def reisner_campaign(count: int = 100, seed: int = 0, max_vertices: int = 7, field: FieldSpec = GF2) -> CampaignResult:
    """Reisner's criterion agrees with ``depth = dim`` from the Betti table."""
    rng = random.Random(seed)
    res = CampaignResult("reisner", seed)
    cm = 0
    while res.checked < count:
        delta = random_complex(rng, rng.randint(2, max_vertices))
        res.checked += 1
        a = is_cohen_macaulay(delta, field)
        b = is_cohen_macaulay_by_depth(delta, field)
        cm += a
        if a != b:
            res.fail(complex=delta.to_json(), reisner=a, depth=b)
    res.stats = {"cohen_macaulay": cm}
    return res


CAMPAIGNS = {
    "shedding": (shedding_campaign, 100),
    "depth": (depth_campaign, 100),
    "decomposable": (decomposable_campaign, 100),
    "radical": (radical_campaign, 100),
    "symbolic": (symbolic_campaign, 0),
    "chordal": (chordal_campaign, 50),
    "shedding-scm": (shedding_scm_campaign, 30),
    "reisner": (reisner_campaign, 100),
}

# short names accepted on the command line
ALIASES = {
    "prop21": "shedding",
    "thm36": "depth",
    "cor33": "decomposable",
    "lemma-rad": "radical",
    "symb": "symbolic",
    "thm23": "shedding-scm",
}


def run_campaign(name: str, count: int | None = None, seed: int = 0, field: FieldSpec = GF2) -> CampaignResult:
    try:
        fn, default = CAMPAIGNS[ALIASES.get(name, name)]
    except KeyError:
        raise InvalidInputError(f"unknown campaign {name!r}; choose from {sorted(CAMPAIGNS) + sorted(ALIASES)}")
    return fn(default if count is None else count, seed, field=field)
