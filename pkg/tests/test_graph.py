import io
import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from johnson_cliques import (
    Edge,
    JohnsonParams,
    RangeError,
    ValidationError,
    are_adjacent,
    edge_count,
    edges,
    export,
    make_label,
    neighbors,
    rank,
    vertex_count,
)
from helpers import colex_subsets, quadratic_edges, swap_adjacent


class TestParams:
    def test_degenerate_boundary_accepted(self):
        assert JohnsonParams(3, 2).degenerate
        assert JohnsonParams(4, 3).degenerate
        assert not JohnsonParams(4, 2).degenerate

    @pytest.mark.parametrize("n,m", [(3, 1), (2, 2), (4, 4), (5, 5)])
    def test_invalid_rejected(self, n, m):
        with pytest.raises(ValidationError):
            JohnsonParams(n, m)

    def test_ground_set_bound(self):
        JohnsonParams(62, 2)
        with pytest.raises(RangeError):
            JohnsonParams(63, 2)


class TestCounts:
    def test_vertex_count_examples(self):
        assert vertex_count(JohnsonParams(4, 2)) == 6
        assert vertex_count(JohnsonParams(5, 3)) == 10
        assert vertex_count(JohnsonParams(9, 4)) == 126

    @pytest.mark.parametrize(
        "n,m,expected",
        [(4, 2, 12), (5, 3, 30), (3, 2, 3)],
    )
    def test_edge_count_examples(self, n, m, expected):
        # frozen from the quadratic pair scan below
        labels = colex_subsets(n, m)
        assert len(quadratic_edges(labels)) == expected
        assert edge_count(JohnsonParams(n, m)) == expected

    def test_edge_count_matches_pair_scan(self):
        for m in (2, 3, 4):
            for n in range(m + 1, 9):
                labels = colex_subsets(n, m)
                assert edge_count(JohnsonParams(n, m)) == len(quadratic_edges(labels))


class TestAdjacency:
    def test_examples(self):
        assert are_adjacent((1, 2), (1, 3))
        assert not are_adjacent((1, 2), (3, 4))
        assert not are_adjacent((1, 2, 3), (1, 4, 5))

    def test_size_mismatch_rejected(self):
        with pytest.raises(ValidationError):
            are_adjacent((1, 2), (1, 2, 3))

    def test_self_not_adjacent(self):
        assert not are_adjacent((1, 2), (1, 2))

    @given(
        st.frozensets(st.integers(1, 12), min_size=3, max_size=3),
        st.frozensets(st.integers(1, 12), min_size=3, max_size=3),
    )
    def test_symmetry(self, a, b):
        la, lb = make_label(a), make_label(b)
        assert are_adjacent(la, lb) == are_adjacent(lb, la)


class TestNeighbors:
    def test_examples(self):
        got = neighbors((1, 2), JohnsonParams(4, 2))
        assert got == [(1, 3), (2, 3), (1, 4), (2, 4)]
        assert len(neighbors((1, 2, 3), JohnsonParams(5, 3))) == 6
        assert neighbors((1, 2), JohnsonParams(3, 2)) == [(1, 3), (2, 3)]

    def test_matches_filter_of_all_labels(self):
        for n, m in [(4, 2), (5, 3), (6, 3), (6, 4)]:
            labels = colex_subsets(n, m)
            p = JohnsonParams(n, m)
            for u in labels:
                expected = [v for v in labels if v != u and swap_adjacent(u, v)]
                assert neighbors(u, p) == expected

    def test_degree_regularity(self):
        for m in (2, 3, 4):
            for n in range(m + 1, 10):
                p = JohnsonParams(n, m)
                total = 0
                for u in colex_subsets(n, m):
                    deg = len(neighbors(u, p))
                    assert deg == m * (n - m)
                    total += deg
                assert total == 2 * edge_count(p)

    def test_label_validated(self):
        with pytest.raises(ValidationError):
            neighbors((1, 5), JohnsonParams(4, 2))


class TestEdges:
    def test_triangle(self):
        got = [(e.u, e.v) for e in edges(JohnsonParams(3, 2))]
        assert got == [((1, 2), (1, 3)), ((1, 2), (2, 3)), ((1, 3), (2, 3))]

    @pytest.mark.parametrize("n,m", [(4, 2), (5, 3)])
    def test_counts(self, n, m):
        assert sum(1 for _ in edges(JohnsonParams(n, m))) == edge_count(JohnsonParams(n, m))

    def test_matches_quadratic_scan(self):
        for n, m in [(4, 2), (5, 2), (6, 2), (4, 3), (5, 3), (6, 3), (5, 4), (6, 4)]:
            labels = colex_subsets(n, m)
            assert vertex_count(JohnsonParams(n, m)) <= 300
            expected = {frozenset(pair) for pair in quadratic_edges(labels)}
            got = [(e.u, e.v) for e in edges(JohnsonParams(n, m))]
            assert len(got) == len(set(got))
            assert {frozenset(pair) for pair in got} == expected

    def test_canonical_order(self):
        p = JohnsonParams(5, 3)
        seen = [(rank(e.u, 5), rank(e.v, 5)) for e in edges(p)]
        assert all(i < j for i, j in seen)
        assert seen == sorted(seen)


class TestEdgeType:
    def test_endpoints_normalized(self):
        e = Edge((1, 3), (1, 2))
        assert (e.u, e.v) == ((1, 2), (1, 3))

    def test_non_adjacent_rejected(self):
        with pytest.raises(ValidationError):
            Edge((1, 2), (3, 4))
        with pytest.raises(ValidationError):
            Edge((1, 2), (1, 2))


class TestExport:
    def test_edgelist_triangle(self):
        sink = io.BytesIO()
        export(JohnsonParams(3, 2), "edgelist", sink)
        assert sink.getvalue() == b"{1,2} -- {1,3}\n{1,2} -- {2,3}\n{1,3} -- {2,3}\n"

    def test_dot_counts(self):
        sink = io.BytesIO()
        export(JohnsonParams(4, 2), "dot", sink)
        text = sink.getvalue().decode()
        lines = text.splitlines()
        assert lines[0] == "graph J_4_2 {"
        assert lines[-1] == "}"
        statements = [ln for ln in lines if "--" in ln]
        assert len(statements) == 12
        ids = set()
        for ln in statements:
            left, right = ln.strip().rstrip(";").split(" -- ")
            ids.add(left.strip('"'))
            ids.add(right.strip('"'))
        assert len(ids) == 6

    def test_json_structure(self):
        sink = io.BytesIO()
        export(JohnsonParams(5, 3), "json", sink)
        payload = json.loads(sink.getvalue().decode())
        assert payload["n"] == 5 and payload["m"] == 3
        assert len(payload["vertices"]) == 10
        assert all(len(v) == 3 for v in payload["vertices"])
        assert len(payload["edges"]) == 30
        for i, j in payload["edges"]:
            assert 0 <= i < j < 10
            u = tuple(payload["vertices"][i])
            v = tuple(payload["vertices"][j])
            assert swap_adjacent(u, v)
        assert payload["edges"] == sorted(payload["edges"])

    def test_unknown_format_rejected(self):
        with pytest.raises(ValidationError):
            export(JohnsonParams(3, 2), "gml", io.BytesIO())

    def test_cap_enforced(self):
        with pytest.raises(RangeError):
            export(JohnsonParams(9, 4), "edgelist", io.BytesIO(), max_vertices=100)

    def test_deterministic(self):
        a, b = io.BytesIO(), io.BytesIO()
        export(JohnsonParams(5, 3), "dot", a)
        export(JohnsonParams(5, 3), "dot", b)
        assert a.getvalue() == b.getvalue()
