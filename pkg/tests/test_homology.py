import random

import pytest

from chromhom import (
    build_complex,
    categorification_check,
    complete_graph,
    frobenius_series,
    graph_from_weights,
    homology_table,
    path_graph,
    single_vertex,
    span_indices,
    span_zero,
)
from chromhom._rat import QQ
from chromhom.lescheck import cached_table
from chromhom.symfunc import basis_convert, csf_state_sum

from corpus import CORPUS, UNIT_GRAPHS, WEIGHTED_VARIANTS

SEGMENT = graph_from_weights([1, 2], [(0, 1)])

SEGMENT_TABLE = {
    (0, 0): {(2, 1): 1},
    (0, 1): {(1, 1, 1): 1},
    (1, 2): {(1, 1, 1): 1},
}

PATH_TABLE = {
    (0, 0): {(1, 1, 1): 1},
    (1, 1): {(2, 1): 1, (1, 1, 1): 2},
    (2, 2): {(1, 1, 1): 1},
}


def test_weighted_segment_golden():
    table = cached_table(SEGMENT)
    assert table.cells == SEGMENT_TABLE


def test_weighted_segment_frobenius():
    series = frobenius_series(cached_table(SEGMENT))
    assert series.text() == "s[2,1] - (q + q^2*t)*s[1,1,1]"
    at_one = series.evaluate(1, 1)
    assert at_one.dict() == {(2, 1): 1, (1, 1, 1): -2}
    at_qt = series.evaluate(QQ(1, 2), 3)
    assert at_qt.coefficient((1, 1, 1)) == -(QQ(1, 2) + 3 * QQ(1, 4))


def test_path_golden():
    assert cached_table(path_graph([1, 1, 1])).cells == PATH_TABLE


def test_unweighted_segment():
    table = cached_table(graph_from_weights([1, 1], [(0, 1)]))
    assert table.cells == {(0, 0): {(1, 1): 1}, (1, 1): {(1, 1): 1}}


def test_edgeless_vertex_series():
    # single vertex of weight n: homology is the chain space, and the
    # series is sum_j (-q)^j s_(n-j,1^j)
    for n in (1, 3, 5):
        table = cached_table(single_vertex(n))
        assert table.cells == {
            (0, j): {(n - j,) + (1,) * j: 1} for j in range(n)
        }
        series = frobenius_series(table)
        val = series.evaluate(2, 1)
        expected = {}
        for j in range(n):
            expected[(n - j,) + (1,) * j] = QQ((-2) ** j)
        assert val.dict() == expected


def test_general_weighted_segments_top_row():
    """For any weighted segment the degree-0 row is concentrated at 0."""
    for weights in [(2, 3), (1, 4), (3, 3), (2, 2)]:
        g = graph_from_weights(list(weights), [(0, 1)])
        table = cached_table(g)
        assert (1, 0) not in table.cells
        assert (0, 0) in table.cells


def test_loop_graph_zero_table():
    table = cached_table(graph_from_weights([2, 1], [(0, 1), (1, 1)]))
    assert table.cells == {}
    assert frobenius_series(table).text() == "0"
    assert span_indices(table, 0) is None
    assert span_zero(table) is None


@pytest.mark.parametrize("name,graph", CORPUS)
def test_categorification(name, graph):
    ok, frob_at_one, csf_schur = categorification_check(graph)
    assert ok, f"{name}: {frob_at_one.text()} != {csf_schur.text()}"


def test_spans_weighted_segment():
    table = cached_table(SEGMENT)
    assert span_indices(table, 0) == (0, 0)
    assert span_zero(table) == 1
    assert span_indices(table, 2) == (1, 1)


def test_spans_path():
    table = cached_table(path_graph([1, 1, 1]))
    assert span_indices(table, 0) == (0, 0)
    assert span_indices(table, 1) == (1, 1)
    assert span_indices(table, 2) == (2, 2)


def test_edge_order_invariance():
    rng = random.Random(42)
    sample = [g for name, g in UNIT_GRAPHS if 1 <= g.m] + [
        g for name, g in WEIGHTED_VARIANTS
        if g.m >= 2 and g.total_weight <= 5
    ]
    for g in sample:
        base = cached_table(g)
        for _ in range(3):
            order = list(range(g.m))
            rng.shuffle(order)
            assert cached_table(g.with_edge_order(tuple(order))) == base


def test_frobenius_single_monomial_coefficients():
    table = cached_table(complete_graph([1, 1, 1]))
    text = frobenius_series(table).text()
    # coefficient polynomials render deterministically
    assert frobenius_series(table).text() == text
    value = frobenius_series(table).evaluate(1, 1)
    assert value == basis_convert(csf_state_sum(complete_graph([1, 1, 1])), "s")


def test_betti_numbers_exposed():
    table = cached_table(SEGMENT)
    assert table.betti_number(0, 0) == 2
    assert table.betti_number(0, 1) == 1
    assert table.betti_number(5, 5) == 0


def test_table_json_shape():
    doc = cached_table(SEGMENT).to_json_dict()
    assert doc["points"] == 3
    assert doc["homology"][0] == {
        "i": 0, "j": 0, "irreducibles": [[[2, 1], 1]], "betti": 2,
    }
