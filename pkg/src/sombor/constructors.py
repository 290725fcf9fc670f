"""Regular graph families, the m-splitting and m-shadow transforms, and
the ``family(args)|transform(...)`` spec grammar used by the CLI.

Both transforms lay vertices out copy-major: vertex ``i`` of block ``t``
gets index ``t * n + i``, with block 0 holding the original graph.
"""

from __future__ import annotations

import enum
import random
import re
from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Union

from .errors import InfeasibleError, ParameterError, RetryLimitError, SpecSyntaxError
from .graph import Graph, edges, new_graph

RANDOM_REGULAR_MAX_ATTEMPTS = 1000


class ShadowConvention(str, enum.Enum):
    """How many copies ``m_shadow`` takes.

    ``DEFINITION`` uses ``m`` copies; ``EXAMPLE`` uses ``m + 1``, matching
    the two-copy drawing of the ``m = 1`` worked example.
    """

    DEFINITION = "definition"
    EXAMPLE = "example"

    def copies(self, m: int) -> int:
        return m if self is ShadowConvention.DEFINITION else m + 1

    def __str__(self) -> str:
        return self.value


# base families


def cycle(n: int) -> Graph:
    if n < 3:
        raise ParameterError(f"cycle(n) needs n >= 3, got {n}")
    return new_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise ParameterError(f"complete(n) needs n >= 1, got {n}")
    return new_graph(n, combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise ParameterError(f"complete_bipartite(a, b) needs a, b >= 1, got {a}, {b}")
    return new_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def hypercube(d: int) -> Graph:
    """``Q_d``: binary labels of length ``d``, adjacent iff they differ in one bit."""
    if d < 1:
        raise ParameterError(f"hypercube(d) needs d >= 1, got {d}")
    n = 1 << d
    return new_graph(n, [(v, v ^ (1 << b)) for v in range(n) for b in range(d) if v < v ^ (1 << b)])


def prism(n: int) -> Graph:
    """Circular ladder ``C_n x K_2``: outer ring ``0..n-1``, inner ring ``n..2n-1``."""
    if n < 3:
        raise ParameterError(f"prism(n) needs n >= 3, got {n}")
    es = []
    for i in range(n):
        j = (i + 1) % n
        es += [(i, j), (n + i, n + j), (i, n + i)]
    return new_graph(2 * n, es)


def random_regular(n: int, k: int, seed: int) -> Graph:
    """Sample a ``k``-regular graph on ``n`` vertices with the pairing model.

    Each attempt shuffles the ``n * k`` stubs and pairs them consecutively;
    attempts producing a loop or a repeated edge are discarded whole, so an
    accepted sample is uniform over simple ``k``-regular graphs.
    """
    if n < 1 or k < 0:
        raise ParameterError(f"random_regular needs n >= 1 and k >= 0, got n={n}, k={k}")
    if k >= n:
        raise InfeasibleError(f"no {k}-regular simple graph on {n} vertices")
    if (n * k) % 2:
        raise InfeasibleError(f"n*k must be even, got n={n}, k={k}")
    rng = random.Random(seed)
    stubs = [v for v in range(n) for _ in range(k)]
    for _ in range(RANDOM_REGULAR_MAX_ATTEMPTS):
        rng.shuffle(stubs)
        seen = set()
        for u, v in zip(stubs[::2], stubs[1::2]):
            if u == v:
                break
            e = (u, v) if u < v else (v, u)
            if e in seen:
                break
            seen.add(e)
        else:
            return new_graph(n, seen)
    raise RetryLimitError(
        f"random_regular({n}, {k}, seed={seed}): no simple pairing in "
        f"{RANDOM_REGULAR_MAX_ATTEMPTS} attempts"
    )


# transforms


def _check_m(m: int) -> None:
    if not isinstance(m, int) or m < 1:
        raise ParameterError(f"m must be a positive integer, got {m!r}")


def m_splitting(G: Graph, m: int) -> Graph:
    """Attach ``m`` clones to every vertex; each clone copies the neighbourhood
    of its original and clones are never adjacent to each other.

    Clone ``j`` (1-based) of vertex ``i`` has index ``j * n + i``.
    """
    _check_m(m)
    n = G.n
    es = list(edges(G))
    for j in range(1, m + 1):
        for i, nbrs in enumerate(G.adjacency):
            es.extend((j * n + i, u) for u in nbrs)
    return new_graph((m + 1) * n, es)


def m_shadow(G: Graph, m: int, convention: Union[ShadowConvention, str] = ShadowConvention.DEFINITION) -> Graph:
    """Join vertex ``i`` of every copy to the neighbours of ``i`` in every copy,
    including its own.

    The copy count is ``m`` or ``m + 1`` depending on ``convention``.
    """
    _check_m(m)
    c = ShadowConvention(convention).copies(m)
    n = G.n
    base = edges(G)
    es = [(t * n + u, s * n + v) for t in range(c) for s in range(c) for u, v in base]
    return new_graph(c * n, es)


# spec grammar


FAMILIES = {
    "cycle": (cycle, 1),
    "complete": (complete, 1),
    "complete_bipartite": (complete_bipartite, 2),
    "hypercube": (hypercube, 1),
    "prism": (prism, 1),
    "random_regular": (random_regular, 3),
}


@dataclass(frozen=True)
class Transform:
    kind: str  # "splitting" or "shadow"
    m: int
    convention: Optional[ShadowConvention] = None

    def __post_init__(self):
        if self.kind not in ("splitting", "shadow"):
            raise SpecSyntaxError(f"unknown transform {self.kind!r}")
        if self.m < 1:
            raise ParameterError(f"{self.kind}: m must be >= 1, got {self.m}")
        if self.kind == "shadow" and self.convention is None:
            object.__setattr__(self, "convention", ShadowConvention.DEFINITION)
        if self.kind == "splitting" and self.convention is not None:
            raise SpecSyntaxError("splitting takes no convention")

    def __str__(self) -> str:
        if self.kind == "splitting":
            return f"splitting(m={self.m})"
        return f"shadow(m={self.m},convention={self.convention})"

    def apply(self, G: Graph) -> Graph:
        if self.kind == "splitting":
            return m_splitting(G, self.m)
        return m_shadow(G, self.m, self.convention)


@dataclass(frozen=True)
class GraphSpec:
    """A base family with its integer arguments, then transforms applied in order."""

    family: str
    args: tuple[int, ...]
    pipeline: tuple[Transform, ...] = ()

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise SpecSyntaxError(f"unknown family {self.family!r}; expected one of {sorted(FAMILIES)}")
        arity = FAMILIES[self.family][1]
        if len(self.args) != arity:
            raise SpecSyntaxError(f"{self.family} takes {arity} argument(s), got {len(self.args)}")
        if self.family != "random_regular" and any(a < 1 for a in self.args):
            raise ParameterError(f"{self.family}: parameters must be positive, got {self.args}")

    def __str__(self) -> str:
        head = f"{self.family}({','.join(map(str, self.args))})"
        return "|".join([head, *map(str, self.pipeline)])

    @property
    def base(self) -> GraphSpec:
        return GraphSpec(self.family, self.args)

    def then(self, transform: Transform) -> GraphSpec:
        return GraphSpec(self.family, self.args, self.pipeline + (transform,))


def generate(spec: Union[GraphSpec, str]) -> Graph:
    if isinstance(spec, str):
        spec = parse_spec(spec)
    fn, _ = FAMILIES[spec.family]
    G = fn(*spec.args)
    for t in spec.pipeline:
        G = t.apply(G)
    return G


_CALL = re.compile(r"^\s*([A-Za-z_]+)\s*\((.*)\)\s*$")


def _split_call(text: str) -> tuple[str, list[str]]:
    match = _CALL.match(text)
    if not match:
        raise SpecSyntaxError(f"expected name(args), got {text.strip()!r}")
    name, body = match.group(1).lower(), match.group(2).strip()
    return name, [a.strip() for a in body.split(",")] if body else []


def _int(text: str, where: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise SpecSyntaxError(f"{where}: expected an integer, got {text!r}") from None


def _parse_transform(text: str) -> Transform:
    name, raw = _split_call(text)
    if name not in ("splitting", "shadow"):
        raise SpecSyntaxError(f"unknown transform {name!r}")
    opts: dict[str, str] = {}
    positional = []
    for a in raw:
        if "=" in a:
            key, val = (s.strip().lower() for s in a.split("=", 1))
            opts[key] = val
        else:
            positional.append(a)
    if positional:
        if len(positional) > 1 or "m" in opts:
            raise SpecSyntaxError(f"{name}: too many arguments in {text.strip()!r}")
        opts["m"] = positional[0]
    allowed = {"m"} if name == "splitting" else {"m", "convention"}
    unknown = set(opts) - allowed
    if unknown:
        raise SpecSyntaxError(f"{name}: unknown option(s) {sorted(unknown)}")
    if "m" not in opts:
        raise SpecSyntaxError(f"{name}: missing m")
    convention = None
    if "convention" in opts:
        try:
            convention = ShadowConvention(opts["convention"])
        except ValueError:
            raise SpecSyntaxError(
                f"shadow: convention must be 'definition' or 'example', got {opts['convention']!r}"
            ) from None
    return Transform(name, _int(opts["m"], name), convention)


def parse_spec(text: str) -> GraphSpec:
    """Parse e.g. ``"complete(4)|shadow(m=2,convention=example)"``.

    Family and transform names are case-insensitive; arguments are integers
    except the shadow convention.
    """
    parts = text.split("|")
    family, raw = _split_call(parts[0])
    if family not in FAMILIES:
        raise SpecSyntaxError(f"unknown family {family!r}; expected one of {sorted(FAMILIES)}")
    args = tuple(_int(a, family) for a in raw)
    pipeline = tuple(_parse_transform(p) for p in parts[1:])
    return GraphSpec(family, args, pipeline)
