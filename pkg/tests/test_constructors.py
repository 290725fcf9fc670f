from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from sombor.constructors import (
    GraphSpec,
    ShadowConvention,
    Transform,
    complete,
    complete_bipartite,
    cycle,
    generate,
    hypercube,
    m_shadow,
    m_splitting,
    parse_spec,
    prism,
    random_regular,
)
from sombor.errors import InfeasibleError, ParameterError, RetryLimitError, SpecSyntaxError
from sombor.graph import degree, edges, induced_subgraph, is_k_regular, new_graph

from _helpers import chorded_hexagon


def splitting_by_definition(G, m):
    """Pairwise test of every candidate edge against the construction rule."""
    n = G.n
    out = []
    for x, y in product(range((m + 1) * n), repeat=2):
        if x >= y:
            continue
        (bx, ix), (by, iy) = divmod(x, n), divmod(y, n)
        if bx == 0 and by == 0 and G.has_edge(ix, iy):
            out.append((x, y))
        elif (bx == 0) != (by == 0) and G.has_edge(ix, iy):
            out.append((x, y))
    return new_graph((m + 1) * n, out)


def shadow_by_definition(G, copies):
    n = G.n
    out = [
        (x, y)
        for x, y in product(range(copies * n), repeat=2)
        if x < y and G.has_edge(x % n, y % n)
    ]
    return new_graph(copies * n, out)


regular_bases = [cycle(4), cycle(6), complete(4), hypercube(3), complete_bipartite(3, 3), prism(3), chorded_hexagon()]


@pytest.mark.parametrize(
    "spec, n, e, k",
    [
        ("cycle(6)", 6, 6, 2),
        ("hypercube(3)", 8, 12, 3),
        ("complete_bipartite(3,3)", 6, 9, 3),
        ("complete(5)", 5, 10, 4),
        ("prism(3)", 6, 9, 3),
        ("hypercube(1)", 2, 1, 1),
    ],
)
def test_families(spec, n, e, k):
    G = generate(spec)
    assert (G.n, G.edge_count, is_k_regular(G)) == (n, e, k)


def test_hypercube_bits():
    G = hypercube(4)
    for u, v in edges(G):
        assert bin(u ^ v).count("1") == 1


@pytest.mark.parametrize("bad", ["cycle(2)", "hypercube(0)", "complete(0)", "prism(2)"])
def test_family_parameter_errors(bad):
    with pytest.raises(ParameterError):
        generate(bad)


def test_splitting_counts():
    S = m_splitting(cycle(6), 1)
    assert (S.n, S.edge_count) == (12, 18)
    assert [degree(S, v) for v in range(6)] == [4] * 6
    assert [degree(S, v) for v in range(6, 12)] == [2] * 6


def test_splitting_single_edge():
    S = m_splitting(new_graph(2, [(0, 1)]), 1)
    assert edges(S) == [(0, 1), (0, 3), (1, 2)]
    assert S.degrees() == [2, 2, 1, 1]


def test_splitting_chorded_hexagon():
    S = m_splitting(chorded_hexagon(), 1)
    assert (S.n, S.edge_count) == (12, 27)


@pytest.mark.parametrize("G", regular_bases)
@pytest.mark.parametrize("m", [1, 2, 3])
def test_splitting_matches_definition(G, m):
    S = m_splitting(G, m)
    assert S == splitting_by_definition(G, m)
    k = is_k_regular(G)
    assert S.edge_count == G.n * k // 2 + G.n * m * k
    assert induced_subgraph(S, range(G.n)) == G


@pytest.mark.parametrize("m", [0, -1])
def test_transform_m_zero(m):
    with pytest.raises(ParameterError):
        m_splitting(cycle(4), m)
    with pytest.raises(ParameterError):
        m_shadow(cycle(4), m)


def test_shadow_examples():
    assert m_shadow(cycle(6), 1, "definition") == cycle(6)
    D = m_shadow(cycle(6), 1, ShadowConvention.EXAMPLE)
    assert (D.n, D.edge_count, is_k_regular(D)) == (12, 24, 4)
    D = m_shadow(cycle(4), 2)
    assert (D.n, D.edge_count, is_k_regular(D)) == (8, 16, 4)


@pytest.mark.parametrize("G", regular_bases)
@pytest.mark.parametrize("m", [1, 2, 3])
@pytest.mark.parametrize("conv", list(ShadowConvention))
def test_shadow_matches_definition(G, m, conv):
    c = conv.copies(m)
    D = m_shadow(G, m, conv)
    assert D == shadow_by_definition(G, c)
    k = is_k_regular(G)
    assert is_k_regular(D) == c * k
    assert D.edge_count == c * c * G.n * k // 2
    assert induced_subgraph(D, range(G.n)) == G


def test_random_regular_deterministic():
    a = random_regular(20, 3, seed=11)
    b = random_regular(20, 3, seed=11)
    assert a == b
    assert is_k_regular(a) == 3


@settings(max_examples=30, deadline=None)
@given(st.integers(4, 24), st.integers(1, 4), st.integers(0, 10**6))
def test_random_regular_property(n, k, seed):
    if n * k % 2 or k >= n:
        with pytest.raises(InfeasibleError):
            random_regular(n, k, seed)
        return
    G = random_regular(n, k, seed)
    assert is_k_regular(G) == k
    assert G.edge_count == n * k // 2


def test_random_regular_infeasible():
    with pytest.raises(InfeasibleError):
        random_regular(5, 3, 0)


def test_random_regular_retry_limit(monkeypatch):
    import sombor.constructors as mod

    monkeypatch.setattr(mod, "RANDOM_REGULAR_MAX_ATTEMPTS", 0)
    with pytest.raises(RetryLimitError):
        random_regular(10, 3, 0)


@pytest.mark.parametrize(
    "text, expected",
    [
        ("cycle(6)", "cycle(6)"),
        ("Cycle( 6 )|Splitting(m=1)", "cycle(6)|splitting(m=1)"),
        ("complete(4)|shadow(m=2,convention=definition)", "complete(4)|shadow(m=2,convention=definition)"),
        ("complete(4)|shadow(2)", "complete(4)|shadow(m=2,convention=definition)"),
        ("hypercube(3)|shadow(m=1,convention=EXAMPLE)|splitting(m=2)", "hypercube(3)|shadow(m=1,convention=example)|splitting(m=2)"),
        ("random_regular(10,3,7)", "random_regular(10,3,7)"),
    ],
)
def test_spec_roundtrip(text, expected):
    spec = parse_spec(text)
    assert str(spec) == expected
    assert parse_spec(str(spec)) == spec


@pytest.mark.parametrize(
    "text",
    [
        "cycle",
        "cycle(6",
        "wheel(5)",
        "cycle(6.5)",
        "cycle(6,7)",
        "cycle(6)|splitting()",
        "cycle(6)|splitting(m=1,convention=example)",
        "cycle(6)|shadow(m=1,convention=other)",
        "cycle(6)|rotate(m=1)",
        "cycle(6)|shadow(m=x)",
    ],
)
def test_spec_syntax_errors(text):
    with pytest.raises(SpecSyntaxError):
        parse_spec(text)


def test_pipeline_applies_left_to_right():
    spec = GraphSpec("cycle", (4,)).then(Transform("shadow", 2)).then(Transform("splitting", 1))
    assert generate(spec) == m_splitting(m_shadow(cycle(4), 2), 1)
