import pytest

from conftest import random_graph
from wcdim.constructions import (
    g7,
    g8,
    g10,
    g_k2,
    gn_expected_mis,
    gn_family,
    graph_for_prime,
    h_of,
)
from wcdim.core import wcdim, wcdim_profile
from wcdim.graph import Graph, canonical_form, contract_clique, inflate_vertex
from wcdim.linalg import is_prime, prime_factors
from wcdim.mis import brute_force_mis, maximal_independent_sets
from wcdim.search import generate_all_graphs

FIELDS = [0, 2, 3, 5]


def test_witness_shapes():
    assert (g7().graph.order, g7().graph.num_edges()) == (7, 11)
    assert g8().graph.order == 8
    assert (g10().graph.order, g10().graph.num_edges()) == (10, 16)
    for make in (g7, g8, g10):
        assert sorted(make().labels) == sorted(f"v{i}" for i in range(1, make().graph.order + 1))


@pytest.mark.parametrize("make, generic, p, at", [(g7, 2, 2, 3), (g8, 1, 3, 2), (g10, 0, 5, 1)])
def test_witness_profiles(make, generic, p, at):
    prof = wcdim_profile(make().graph)
    assert (prof.wcdim_generic, prof.critical_primes, prof.wcdim_at) == (generic, (p,), {p: at})


def test_g8_is_the_unique_order_8_graph_with_prime_3():
    hits = [g for g in generate_all_graphs(8) if 3 in wcdim_profile(g).critical_primes]
    assert len(hits) == 1
    assert canonical_form(hits[0]) == canonical_form(g8().graph)


def test_gk2():
    named = g_k2()
    g = named.graph
    assert (g.order, g.num_edges()) == (6, 7)
    assert [g.degree(named[x]) for x in ("u", "w", "v1", "v2", "v3", "v4")] == [3, 3, 2, 2, 2, 2]
    s = named.vertex_set
    # u and w are adjacent, so only these four sets are maximal independent
    found = set(brute_force_mis(g).sets)
    assert found == {s("v1", "v4"), s("v2", "v3"), s("v1", "v2", "w"), s("v3", "v4", "u")}
    assert set(maximal_independent_sets(g).sets) == found


class TestHOf:
    def test_structure(self):
        base = Graph.cycle(4)
        named = h_of(base)
        g = named.graph
        assert g.order == 10
        xs = [named[f"x{i}"] for i in range(1, 5)]
        for x in xs:
            for vi in ("v1", "v2", "v3", "v4"):
                assert g.has_edge(x, named[vi])
            assert not g.has_edge(x, named["u"]) and not g.has_edge(x, named["w"])

    def test_c4_shift(self):
        base = Graph.cycle(4)
        h = h_of(base).graph
        assert wcdim(h, 0) == wcdim(base, 0) + 1
        assert wcdim(h, 2) == wcdim(base, 2) + 2
        assert (wcdim(base, 0), wcdim(h, 0), wcdim(h, 2)) == (3, 4, 5)

    def test_independent_sets_have_the_listed_forms(self, rng):
        for _ in range(20):
            base = random_graph(rng, rng.randint(1, 6))
            named = h_of(base)
            s = named.vertex_set
            shift = lambda m: m << 6
            expected = {s("v1", "v4"), s("v2", "v3"), s("v1", "v2", "w"), s("v3", "v4", "u")}
            for m in maximal_independent_sets(base).sets:
                expected.add(s("u") | shift(m))
                expected.add(s("w") | shift(m))
            found = set(maximal_independent_sets(named.graph).sets)
            assert found == expected
            assert len(found) == 4 + 2 * len(maximal_independent_sets(base))

    def test_edgeless_inputs(self):
        for n in range(1, 6):
            base = Graph.empty(n)
            h = h_of(base).graph
            for f in FIELDS:
                assert wcdim(h, f) - wcdim(base, f) == (2 if f == 2 else 1)

    def test_random_shift(self, rng):
        for _ in range(50):
            base = random_graph(rng, rng.randint(1, 6))
            h = h_of(base).graph
            for f in FIELDS:
                assert wcdim(h, f) - wcdim(base, f) == (2 if f == 2 else 1)


class TestGnFamily:
    def test_small_n_rejected(self):
        with pytest.raises(ValueError):
            gn_family(1)

    def test_g3_figure(self):
        named = gn_family(3)
        g = named.graph
        assert g.order == 10
        # every y_i is joined to u_j exactly when i != j
        for i in range(1, 4):
            for j in range(1, 4):
                assert g.has_edge(named[f"y{i}"], named[f"u{j}"]) == (i != j)
        assert g.has_edge(named["v1"], named["w1"]) and g.has_edge(named["v2"], named["w2"])
        assert not g.has_edge(named["v1"], named["w2"])
        mis = {frozenset(named.names()[v] for v in members) for members in maximal_independent_sets(g).as_lists()}
        expected = {frozenset(x) for x in (
            {"y1", "w1", "w2"}, {"y2", "w1", "w2"}, {"y3", "w1", "w2"},
            {"y1", "u1"}, {"y2", "u2"}, {"y3", "u3"},
            {"v1", "w2"}, {"v2", "w1"},
            {"v1", "u1", "u2", "u3"}, {"v2", "u1", "u2", "u3"},
        )}
        assert mis == expected

    @pytest.mark.parametrize("n", range(2, 11))
    def test_dimension_formula(self, n):
        named = gn_family(n)
        g = named.graph
        assert g.order == 2 * n + 4
        mis = maximal_independent_sets(g)
        assert len(mis) == 2 * n + 4
        assert set(mis.sets) == gn_expected_mis(named, n)
        assert wcdim(g, 0) == 1
        for p in range(2, 2 * n):
            if is_prime(p):
                assert wcdim(g, p) == (2 if (2 * n - 1) % p == 0 else 1)

    def test_n8_two_primes(self):
        prof = wcdim_profile(gn_family(8).graph)
        assert prof.critical_primes == (3, 5)
        assert prof.wcdim_at == {3: 2, 5: 2}

    def test_brute_force_agrees_for_small_n(self):
        for n in (2, 3, 4):
            g = gn_family(n).graph
            assert brute_force_mis(g) == maximal_independent_sets(g)


class TestGraphForPrime:
    @pytest.mark.parametrize("p, order", [(2, 7), (2, 12), (3, 8), (3, 11), (5, 10), (5, 15), (7, 12), (11, 16), (13, 20)])
    def test_has_prime_and_order(self, p, order):
        named = graph_for_prime(p, order)
        prof = wcdim_profile(named.graph)
        assert named.graph.order == order
        assert p in prof.critical_primes

    def test_padding_keeps_g7_values(self):
        prof = wcdim_profile(graph_for_prime(2, 12).graph)
        assert (prof.wcdim_generic, prof.wcdim_at) == (2, {2: 3})

    def test_seed_for_7(self):
        named = graph_for_prime(7, 12)
        assert named.graph == gn_family(4).graph
        assert wcdim_profile(named.graph).critical_primes == (7,)

    def test_errors(self):
        with pytest.raises(ValueError):
            graph_for_prime(3, 7)
        with pytest.raises(ValueError):
            graph_for_prime(9, 20)


def _same(a, b):
    return (a.wcdim_generic, a.critical_primes, a.wcdim_at) == (b.wcdim_generic, b.critical_primes, b.wcdim_at)


def test_inflation_preserves_profile(rng):
    seeds = [g7().graph, g8().graph, gn_family(2).graph]
    for i in range(100):
        g = seeds[i % 3] if i % 4 == 0 else random_graph(rng, rng.randint(1, 7))
        v = rng.randrange(g.order)
        k = rng.randint(1, 4)
        assert _same(wcdim_profile(inflate_vertex(g, v, k)), wcdim_profile(g))


def test_twin_clique_contraction_preserves_profile(rng):
    done = 0
    while done < 100:
        g = random_graph(rng, rng.randint(2, 8))
        # build twins by inflating, then shuffle labels so the clique is not trailing
        g = inflate_vertex(g, rng.randrange(g.order), rng.randint(2, 3))
        perm = list(range(g.order))
        rng.shuffle(perm)
        g = g.relabel(perm)
        for v in g.vertices():
            twins = [u for u in g.vertices() if g.closed_neighborhood(u) == g.closed_neighborhood(v)]
            if len(twins) > 1:
                sub = twins[: rng.randint(2, len(twins))]
                h, _ = contract_clique(g, sub)
                assert _same(wcdim_profile(h), wcdim_profile(g))
                done += 1
                break


def test_prime_factor_helper_matches_family():
    for n in range(2, 11):
        assert wcdim_profile(gn_family(n).graph).critical_primes == tuple(prime_factors(2 * n - 1))
