"""Closed-form claims about m-splitting and m-shadow graphs, each paired with
a direct computation on the constructed graph.

A claim's ``formula`` only sees the parameters ``(n, k, m, aux)``; its
``direct`` side builds the transformed graph and evaluates the invariant
from scratch. ``aux`` carries the graph energy of the base graph for the
energy formulas.

Disagreement is an outcome, not an error: :func:`check_claim` reports it as a
``mismatch`` verdict with the deviation attached.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Optional, Sequence, Union

from .constructors import GraphSpec, ShadowConvention, generate, m_shadow, m_splitting, parse_spec
from .errors import ParameterError, SomborError
from .graph import Graph, is_k_regular
from .invariants import (
    graph_energy,
    rank2_spectrum,
    reduced_matrix,
    sombor_energy,
    sombor_index,
)

INDEX_TOL = 1e-9
ENERGY_TOL = 1e-8

MATCH = "match"
MISMATCH = "mismatch"
INAPPLICABLE = "inapplicable"
ERROR = "error"

SQRT2 = math.sqrt(2.0)
DEF = ShadowConvention.DEFINITION
EX = ShadowConvention.EXAMPLE
BOTH = (DEF, EX)


class UnknownClaimError(SomborError, KeyError):
    pass


@dataclass(frozen=True)
class Params:
    n: int
    k: int
    m: int
    aux: Optional[float] = None


@dataclass(frozen=True)
class Instance:
    spec: GraphSpec
    m: int
    convention: Optional[ShadowConvention] = None

    def __str__(self) -> str:
        out = f"{self.spec} m={self.m}"
        if self.convention is not None:
            out += f" convention={self.convention}"
        return out

    def sort_key(self) -> tuple:
        return (str(self.spec), self.m, "" if self.convention is None else self.convention.value)

    def to_dict(self) -> dict:
        return {
            "spec": str(self.spec),
            "m": self.m,
            "convention": None if self.convention is None else self.convention.value,
        }


@dataclass(frozen=True)
class Context:
    """What a direct evaluator gets: the base graph and the instance knobs."""

    G: Graph
    k: int
    m: int
    convention: Optional[ShadowConvention]


@dataclass(frozen=True)
class Claim:
    id: str
    description: str
    formula: Callable[[Params], float]
    direct: Callable[[Context], float]
    kind: str = "index"  # "index" or "energy"; picks the default tolerance
    conventions: tuple = (None,)
    family: Optional[str] = None  # table claims only apply to one family
    needs_aux: bool = False

    @property
    def default_tol(self) -> float:
        return ENERGY_TOL if self.kind == "energy" else INDEX_TOL

    def matches_family(self, spec: GraphSpec) -> bool:
        if self.family is None:
            return True
        if spec.pipeline or spec.family != self.family:
            return False
        if spec.family == "complete_bipartite":
            return spec.args[0] == spec.args[1]
        return True


@dataclass(frozen=True)
class ClaimResult:
    claim_id: str
    instance: Instance
    formula_value: Optional[float]
    direct_value: Optional[float]
    abs_dev: Optional[float]
    rel_dev: Optional[float]
    verdict: str
    tol: float
    note: str = ""

    def to_dict(self) -> dict:
        return {
            "claim_id": self.claim_id,
            "instance": self.instance.to_dict(),
            "formula_value": _round12(self.formula_value),
            "direct_value": _round12(self.direct_value),
            "abs_dev": _round12(self.abs_dev),
            "rel_dev": _round12(self.rel_dev),
            "verdict": self.verdict,
        }


# cached direct evaluations; graphs are immutable and hashable


@lru_cache(maxsize=512)
def _splitting(G: Graph, m: int) -> Graph:
    return m_splitting(G, m)


@lru_cache(maxsize=512)
def _shadow(G: Graph, m: int, convention: ShadowConvention) -> Graph:
    return m_shadow(G, m, convention)


@lru_cache(maxsize=1024)
def _so(G: Graph) -> float:
    return sombor_index(G)


@lru_cache(maxsize=1024)
def _eps(G: Graph) -> float:
    return graph_energy(G)


@lru_cache(maxsize=1024)
def _es(G: Graph) -> float:
    return sombor_energy(G)


def _split_roots(k: int, m: int) -> tuple[float, float]:
    B = reduced_matrix("splitting", k, m)
    nz = sorted(rank2_spectrum(B[0, 0], B[0, 1], m).values, reverse=True)
    return nz[0], nz[-1]


# formulas as printed


def _split_factor(m: int) -> float:
    return m * math.sqrt(2 * m * m + 4 * m + 4) + (m + 1)


def _shadow_factor(m: int) -> float:
    return m**3 + m**2


def _so_regular(p: Params) -> float:
    return p.n * p.k**2 / SQRT2


def _t3(p: Params) -> float:
    return p.k * (p.m + 1) * SQRT2 * p.aux


def _t4(p: Params) -> float:
    return p.m * p.k * math.sqrt(2 + 8 * p.m) * p.aux


def _t3_disc(p: Params) -> float:
    m = p.m
    return p.k * math.sqrt(4 * m**3 + 10 * m**2 + 10 * m + 2)


def _split_struct(p: Params) -> float:
    hi, lo = _split_roots(p.k, p.m)
    return (abs(hi) + abs(lo)) * p.aux


def _hypercube_energy_factor(n: int, c: int) -> float:
    return c * math.comb(n, c)


# direct sides


def _d_so(ctx: Context) -> float:
    return _so(ctx.G)


def _d_so_split(ctx: Context) -> float:
    return _so(_splitting(ctx.G, ctx.m))


def _d_so_shadow(ctx: Context) -> float:
    return _so(_shadow(ctx.G, ctx.m, ctx.convention))


def _d_es_split(ctx: Context) -> float:
    return _es(_splitting(ctx.G, ctx.m))


def _d_es_shadow(ctx: Context) -> float:
    return _es(_shadow(ctx.G, ctx.m, ctx.convention))


def _d_shadow_degree(ctx: Context) -> float:
    k = is_k_regular(_shadow(ctx.G, ctx.m, ctx.convention))
    return math.nan if k is None else float(k)


def _d_root_spread(ctx: Context) -> float:
    hi, lo = _split_roots(ctx.k, ctx.m)
    return hi - lo


def _table_claims() -> list[Claim]:
    out = []

    def add(fam_tag, family, cell, formula, direct, kind="index", conventions=(None,), aux=False):
        out.append(
            Claim(
                id=f"TBL1-{fam_tag}-{cell}",
                description=f"table cell {cell} for {fam_tag}",
                formula=formula,
                direct=direct,
                kind=kind,
                conventions=conventions,
                family=family,
                needs_aux=aux,
            )
        )

    # C_n: n = cycle length
    add("Cn", "cycle", "SO", lambda p: 2 * SQRT2 * p.n, _d_so)
    add("Cn", "cycle", "SO-Spl", lambda p: 2 * SQRT2 * p.n * _split_factor(p.m), _d_so_split)
    add("Cn", "cycle", "SO-D", lambda p: 2 * SQRT2 * p.n * _shadow_factor(p.m), _d_so_shadow, conventions=BOTH)
    add("Cn", "cycle", "SE-Spl", lambda p: 2 * SQRT2 * (p.m + 1) * p.aux, _d_es_split, "energy", aux=True)
    add("Cn", "cycle", "SE-D", lambda p: 2 * p.m * math.sqrt(8 * p.m + 2) * p.aux, _d_es_shadow, "energy", BOTH, aux=True)

    # K_n: n = vertex count
    def kn_so(p):
        return p.n * (p.n - 1) ** 2 / SQRT2

    add("Kn", "complete", "SO", kn_so, _d_so)
    add("Kn", "complete", "SO-Spl", lambda p: kn_so(p) * _split_factor(p.m), _d_so_split)
    add("Kn", "complete", "SO-D", lambda p: p.n * (p.n - 1) ** 2 / 2 * _shadow_factor(p.m), _d_so_shadow, conventions=BOTH)
    add("Kn", "complete", "SE-Spl", lambda p: 2 * SQRT2 * (p.n - 1) ** 2 * (p.m + 1), _d_es_split, "energy")
    add("Kn", "complete", "SE-D", lambda p: 2 * (p.n - 1) ** 2 * p.m * math.sqrt(8 * p.m + 2), _d_es_shadow, "energy", BOTH)

    # Q_n: n = dimension
    def qn_so(p):
        return 2 ** (p.n - 0.5) * p.n**2

    add("Qn", "hypercube", "SO", qn_so, _d_so)
    add("Qn", "hypercube", "SO-Spl", lambda p: qn_so(p) * _split_factor(p.m), _d_so_split)
    add("Qn", "hypercube", "SO-D", lambda p: qn_so(p) * _shadow_factor(p.m), _d_so_shadow, conventions=BOTH)
    # printed ceil(n/n) and the ceil(n/2) reading
    for tag, c_of in (("printed", lambda n: math.ceil(n / n)), ("ceilhalf", lambda n: math.ceil(n / 2))):
        add(
            "Qn", "hypercube", f"SE-Spl-{tag}",
            lambda p, c_of=c_of: 2 * SQRT2 * p.n * (p.m + 1) * _hypercube_energy_factor(p.n, c_of(p.n)),
            _d_es_split, "energy",
        )
        add(
            "Qn", "hypercube", f"SE-D-{tag}",
            lambda p, c_of=c_of: 2 * p.m * p.n * math.sqrt(8 * p.m + 2) * _hypercube_energy_factor(p.n, c_of(p.n)),
            _d_es_shadow, "energy", BOTH,
        )

    # K_{n,n}: n = part size
    def knn_so(p):
        return SQRT2 * p.n**3

    add("Knn", "complete_bipartite", "SO", knn_so, _d_so)
    add("Knn", "complete_bipartite", "SO-Spl", lambda p: knn_so(p) * _split_factor(p.m), _d_so_split)
    add("Knn", "complete_bipartite", "SO-D", lambda p: knn_so(p) * _shadow_factor(p.m), _d_so_shadow, conventions=BOTH)
    add("Knn", "complete_bipartite", "SE-Spl", lambda p: 2 * SQRT2 * p.n**2 * (p.m + 1), _d_es_split, "energy")
    add("Knn", "complete_bipartite", "SE-D", lambda p: 2 * p.m * p.n**2 * math.sqrt(8 * p.m + 2), _d_es_shadow, "energy", BOTH)
    return out


def _build_registry() -> tuple[Claim, ...]:
    core = [
        Claim("T1a", "SO(G) = n k^2 / sqrt2 for k-regular G", _so_regular, _d_so),
        Claim(
            "T1b",
            "SO(Spl_m G) = SO(G) (m sqrt(2m^2+4m+4) + m + 1)",
            lambda p: _so_regular(p) * _split_factor(p.m),
            _d_so_split,
        ),
        Claim(
            "T2",
            "SO(D_m G) = SO(G) (m^3 + m^2)",
            lambda p: _so_regular(p) * _shadow_factor(p.m),
            _d_so_shadow,
            conventions=BOTH,
        ),
        Claim("P1", "D_m G is mk-regular", lambda p: float(p.m * p.k), _d_shadow_degree, conventions=(DEF,)),
        Claim("T3", "ES(Spl_m G) = k (m+1) sqrt2 eps(G)", _t3, _d_es_split, "energy", needs_aux=True),
        Claim(
            "T3-disc",
            "root spread of the splitting arrowhead = k sqrt(4m^3+10m^2+10m+2)",
            _t3_disc,
            _d_root_spread,
        ),
        Claim("T4", "ES(D_m G) = m k sqrt(8m+2) eps(G)", _t4, _d_es_shadow, "energy", BOTH, needs_aux=True),
        Claim(
            "SPLIT-STRUCT",
            "ES(Spl_m G) = (|mu1| + |mu2|) eps(G), mu from the splitting arrowhead",
            _split_struct,
            _d_es_split,
            "energy",
            needs_aux=True,
        ),
    ]
    registry = tuple(core + _table_claims())
    ids = [c.id for c in registry]
    assert len(ids) == len(set(ids)), "duplicate claim id"
    return registry


_REGISTRY = _build_registry()
_BY_ID = {c.id: c for c in _REGISTRY}


def builtin_claims() -> tuple[Claim, ...]:
    return _REGISTRY


def get_claim(claim_id: str) -> Claim:
    try:
        return _BY_ID[claim_id]
    except KeyError:
        raise UnknownClaimError(f"unknown claim id {claim_id!r}") from None


def evaluate_formula(claim_id: str, n: int, k: int, m: int = 1, aux: Optional[float] = None) -> float:
    """Evaluate a claim's closed form.

    For ``TBL1-*`` claims ``n`` is the family parameter (cycle length, vertex
    count of ``K_n``, hypercube dimension, part size of ``K_{n,n}``); for the
    others it is the vertex count of the base graph.
    """
    claim = get_claim(claim_id)
    if claim.needs_aux and aux is None:
        raise ParameterError(f"claim {claim_id} needs aux = graph energy of the base graph")
    return float(claim.formula(Params(n, k, m, aux)))


# comparison


def deviation(formula_value: float, direct_value: float) -> tuple[float, float]:
    abs_dev = abs(formula_value - direct_value)
    return abs_dev, abs_dev / max(abs(direct_value), 1.0)


def verdict_for(rel_dev: float, tol: float) -> str:
    return MATCH if rel_dev <= tol else MISMATCH


def check_claim(
    claim: Union[Claim, str],
    instance: Instance,
    tol: Optional[float] = None,
) -> ClaimResult:
    """Evaluate both sides of ``claim`` on ``instance`` and compare them.

    Generation failures propagate. A base graph that is not regular of
    positive degree, or that does not belong to a table claim's family,
    yields an ``inapplicable`` result.
    """
    if isinstance(claim, str):
        claim = get_claim(claim)
    tol = claim.default_tol if tol is None else tol
    if not tol > 0:
        raise ParameterError(f"tol must be positive, got {tol}")

    def inapplicable(why: str) -> ClaimResult:
        return ClaimResult(claim.id, instance, None, None, None, None, INAPPLICABLE, tol, why)

    if not claim.matches_family(instance.spec):
        return inapplicable(f"not a {claim.family} base graph")
    if instance.convention not in claim.conventions:
        return inapplicable(f"convention {instance.convention} not used by this claim")
    G = generate(instance.spec)
    if G.n < 2:
        return inapplicable("needs at least 2 vertices")
    k = is_k_regular(G)
    if k is None:
        return inapplicable("base graph is not regular")
    if k < 1:
        return inapplicable("base graph has no edges")

    # table claims take the family parameter, the rest the vertex count
    n = instance.spec.args[0] if claim.family else G.n
    aux = _eps(G) if claim.needs_aux else None
    f = float(claim.formula(Params(n, k, instance.m, aux)))
    d = float(claim.direct(Context(G, k, instance.m, instance.convention)))
    abs_dev, rel_dev = deviation(f, d)
    verdict = MISMATCH if math.isnan(rel_dev) else verdict_for(rel_dev, tol)
    return ClaimResult(claim.id, instance, f, d, abs_dev, rel_dev, verdict, tol)


def instances_for(claim: Claim, spec: GraphSpec, m_values: Iterable[int], conventions: Optional[Sequence] = None) -> list[Instance]:
    if not claim.matches_family(spec):
        return []
    out = []
    for m in m_values:
        for conv in claim.conventions:
            if conv is not None and conventions is not None and conv not in conventions:
                continue
            out.append(Instance(spec, m, conv))
    return out


def run_suite(
    specs: Sequence[Union[GraphSpec, str]],
    m_values: Sequence[int],
    tol: Optional[float] = None,
    conventions: Optional[Sequence[ShadowConvention]] = None,
    claims: Optional[Sequence[Claim]] = None,
) -> list[ClaimResult]:
    """Check every claim on every instance it applies to.

    ``tol=None`` uses each claim's default. Per-instance failures become
    ``error`` rows rather than aborting the run. Rows are sorted by
    ``(claim id, spec, m, convention)``.
    """
    specs = [parse_spec(s) if isinstance(s, str) else s for s in specs]
    if conventions is not None:
        conventions = [ShadowConvention(c) for c in conventions]
    claims = builtin_claims() if claims is None else claims
    report = []
    for claim in claims:
        for spec in specs:
            for inst in instances_for(claim, spec, m_values, conventions):
                try:
                    report.append(check_claim(claim, inst, tol))
                except SomborError as exc:
                    t = claim.default_tol if tol is None else tol
                    report.append(ClaimResult(claim.id, inst, None, None, None, None, ERROR, t, str(exc)))
    report.sort(key=lambda r: (r.claim_id, *r.instance.sort_key()))
    return report


TABLE_FAMILIES = (
    ("Cn", "cycle", lambda n: GraphSpec("cycle", (n,))),
    ("Kn", "complete", lambda n: GraphSpec("complete", (n,))),
    ("Qn", "hypercube", lambda n: GraphSpec("hypercube", (n,))),
    ("Knn", "complete_bipartite", lambda n: GraphSpec("complete_bipartite", (n, n))),
)


def table_report(n: int, m_values: Sequence[int], conventions: Optional[Sequence] = None) -> list[ClaimResult]:
    """Table cells for ``C_n``, ``K_n``, ``Q_n`` and ``K_{n,n}`` side by side
    with direct values. Families whose parameter is out of range are skipped."""
    specs = []
    for _, family, make in TABLE_FAMILIES:
        if family == "cycle" and n < 3:
            continue
        if family == "complete" and n < 2:
            continue
        specs.append(make(n))
    table = [c for c in builtin_claims() if c.family is not None]
    return run_suite(specs, m_values, conventions=conventions, claims=table)


# serialization


def _round12(x: Optional[float]) -> Optional[float]:
    if x is None or math.isnan(x) or math.isinf(x):
        return None
    return float(f"{x:.12g}")


def fmt12(x: Optional[float]) -> str:
    if x is None:
        return ""
    return f"{x:.12g}"


COLUMNS = ("claim_id", "instance", "formula_value", "direct_value", "abs_dev", "rel_dev", "verdict")


def _row(r: ClaimResult) -> list[str]:
    return [
        r.claim_id,
        str(r.instance),
        fmt12(r.formula_value),
        fmt12(r.direct_value),
        fmt12(r.abs_dev),
        fmt12(r.rel_dev),
        r.verdict,
    ]


def report_to_json(report: Sequence[ClaimResult]) -> str:
    return json.dumps([r.to_dict() for r in report], indent=2) + "\n"


def report_to_csv(report: Sequence[ClaimResult]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(COLUMNS)
    writer.writerows(_row(r) for r in report)
    return buf.getvalue()


def report_to_markdown(report: Sequence[ClaimResult]) -> str:
    lines = ["| " + " | ".join(COLUMNS) + " |", "|" + "---|" * len(COLUMNS)]
    lines += ["| " + " | ".join(_row(r)) + " |" for r in report]
    return "\n".join(lines) + "\n"


def summarize(report: Sequence[ClaimResult]) -> dict[str, int]:
    counts = {MATCH: 0, MISMATCH: 0, INAPPLICABLE: 0, ERROR: 0}
    for r in report:
        counts[r.verdict] += 1
    return counts
