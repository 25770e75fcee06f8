import pytest

import throttling


def test_family_product_value():
    graph, vertices, _ = throttling.fixture("family_6n7:K2")
    assert graph.order == 7
    result = throttling.throttle("pd", "prodx", graph)
    assert result["value"] == 6
    assert throttling.throttle_set("pd", "prodx", graph, [vertices["v1"], vertices["v2"]]) == 6


def test_path_values():
    for n in range(2, 9):
        path = throttling.Graph(n, [(i, i + 1) for i in range(n - 1)])
        assert throttling.throttle("psd", "prodstar", path)["value"] == (n + 2) // 3
        assert throttling.throttle("zf", "prodx", path)["value"] == n


def test_graph6_round_trip():
    graph = throttling.Graph.from_graph6("E?Bw")
    assert throttling.Graph.from_graph6(graph.graph6()) == graph


def test_parse_error():
    with pytest.raises(ValueError):
        throttling.Graph.from_graph6("~~~")


def test_propagation_time_infinite():
    star = throttling.Graph(4, [(0, 1), (0, 2), (0, 3)])
    assert throttling.propagation_time("zf", star, [1]) is None
    assert throttling.propagation_time("pd", star, [0]) == 1


def test_connected_counts():
    assert [len(throttling.graphs(n, True)) for n in range(1, 6)] == [1, 1, 2, 6, 21]


def test_certificate():
    graph, _, _ = throttling.fixture("ex11_57:K2")
    cert = throttling.certificate(graph, "sum")
    assert cert["value"] <= 7 // 3 + 2


def test_paper_suite_filter():
    report = throttling.paper_suite({"figure": "4"})
    assert report["summary"] == {"total": 4, "passed": 4, "failed": 0}


def test_property_suite():
    report = throttling.property_suite("ore", 5)
    assert report["summary"]["failed"] == 0
    assert "lemma3.1-z" in throttling.property_suite_names()
