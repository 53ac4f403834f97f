import math

import pytest

import decapsp


def k3():
    g = decapsp.Graph(3)
    g.add_edge(0, 1)
    g.add_edge(1, 2)
    g.add_edge(0, 2)
    return g


def test_graph_updates():
    g = k3()
    g.delete(0, 1)
    assert not g.has_edge(0, 1)
    assert g.version == 1
    with pytest.raises(decapsp.EdgeNotFound):
        g.delete(0, 1)
    h = decapsp.Graph(2, 10)
    h.add_edge(0, 1, 3)
    with pytest.raises(decapsp.MonotonicityViolation):
        h.increase(0, 1, 2)
    h.increase(0, 1, 5)
    assert h.weight(0, 1) == 5


def test_parse_round_trip():
    g = decapsp.parse_graph("3 3\n0 1 1\n1 2 1\n0 2 1\n")
    assert g.edges() == [(0, 1, 1), (0, 2, 1), (1, 2, 1)]
    assert decapsp.parse_graph(g.serialize()).edges() == g.edges()
    with pytest.raises(decapsp.ParseError):
        decapsp.parse_graph("2 1\n0 0 1\n")


def test_rounded_and_exact():
    assert decapsp.rounded(5.0, 0.5) == pytest.approx(5.0625)
    d = decapsp.exact_apsp(k3())
    assert d[0][1] == 1 and d[0][0] == 0
    g = decapsp.Graph(3)
    g.add_edge(0, 1)
    assert math.isinf(decapsp.exact_apsp(g)[0][2])


def test_algorithms_stay_within_their_bounds():
    g, stream = decapsp.generate(20, 0.3, max_weight=1, seed=3)
    for algo, flags in [
        ("mult", {}),
        ("mixed", {"tau": 4}),
        ("unweighted-mult", {"eps": 0.1}),
        ("additive", {"k": 2, "d": 4}),
        ("static-2", {}),
    ]:
        report = decapsp.verify(g, stream, algo, dense=True, **flags)
        assert report["pass"], algo


def test_incremental_queries_respect_stretch():
    g, _ = decapsp.generate(16, 0.4, max_weight=5, seed=2)
    a = decapsp.make_algorithm(g, "mult", p=0.3, seed=4)
    for u, v, _w in g.edges()[:10]:
        a.delete(u, v)
        exact = decapsp.exact_apsp(a.graph)
        for x in range(16):
            for y in range(16):
                est = a.query(x, y)
                if math.isinf(exact[x][y]):
                    assert math.isinf(est)
                else:
                    assert exact[x][y] <= est <= 2.9 * exact[x][y]
    assert a.counters()["max_node_rebuilds"] >= 0


def test_missing_tau_is_a_config_error():
    g, _ = decapsp.generate(8, 1.0)
    with pytest.raises(decapsp.ConfigError):
        decapsp.make_algorithm(g, "mixed")


def test_run_is_deterministic():
    g, stream = decapsp.generate(12, 0.5, seed=9, checkpoint_every=3)
    a = decapsp.run(g, stream, "mult", seed=1)
    b = decapsp.run(g, stream, "mult", seed=1)
    assert a["answers"] == b["answers"]
    assert a["counters"] == b["counters"]


def test_monotone_tree():
    g = decapsp.Graph(3)
    g.add_edge(0, 1)
    g.add_edge(1, 2)
    t = decapsp.MonotoneESTree(g, 0, 10)
    t.insert_edge(0, 2, 1)
    assert t.level(2) == 2
    assert t.delete_edge(1, 2) == []
    assert t.level(2) == 2
