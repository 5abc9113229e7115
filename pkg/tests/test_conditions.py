from __future__ import annotations

import pytest

from conftest import structure, two_clique, variant_graph
from icindex import (
    DomainError,
    GraphError,
    check_conditions,
    count_a,
    count_b,
    ic_structure,
    theorem1_predict,
)

# Full feeder-count tables over their legal domains.
EXPECTED_A = {
    "g1": {(1, 9): 2, (1, 10): 1, (1, 11): 1, (1, 12): 1, (1, 13): 1,
           (2, 11): 1, (2, 12): 1, (2, 13): 1, (3, 12): 1, (3, 13): 1,
           (6, 9): 1, (6, 10): 1, (6, 11): 1, (6, 12): 1},
    "g2": {(1, 8): 2, (1, 9): 1, (3, 8): 1, (4, 11): 1, (5, 11): 1},
    "g3": {},
    "g4": {},
    "g5": {(1, 8): 1, (3, 7): 1, (4, 10): 1, (5, 10): 1},
    "g6": {(1, 9): 1, (1, 11): 1, (2, 8): 1, (2, 12): 1, (3, 10): 1,
           (4, 7): 1, (5, 7): 1},
    "g7": {(1, 7): 1, (1, 8): 1, (2, 6): 1, (2, 7): 1, (4, 9): 1, (5, 10): 1},
    "g8": {(1, 7): 1, (1, 8): 2, (1, 9): 1, (2, 11): 1, (3, 8): 1,
           (4, 11): 1, (5, 11): 1},
}

EXPECTED_B_NONZERO = {
    "g1": {(2, 9): 1, (3, 9): 1},
    "g2": {}, "g3": {}, "g4": {}, "g5": {}, "g6": {}, "g7": {}, "g8": {},
}

EXPECTED_B_DOMAINS = {
    "g1": {1: {8}, 2: {7, 8, 9, 14}, 3: {7, 8, 9, 10, 14},
           4: {9, 10, 11, 12, 13, 14}, 5: {7, 8, 9, 10, 11, 12, 13, 14},
           6: {7, 8, 14}},
    "g2": {1: {10, 11}, 2: {6, 7, 8, 9, 10, 11}, 3: {6, 7, 10},
           4: {6, 7, 8, 9}, 5: {6, 7, 8, 9}},
    "g3": {1: {4}, 2: {5}, 3: {6}},
    "g4": {1: {6}, 2: {5}, 3: {5, 6}, 4: {5, 6}},
    "g5": {1: {9, 10}, 2: {6, 7, 8, 9, 10}, 3: {6, 9}, 4: {6, 7, 8},
           5: {6, 7, 8}},
    "g6": {1: {7, 12}, 2: {10, 11}, 3: {7, 8, 9, 12}, 4: {8, 9, 10, 11},
           5: {8, 9, 10, 11}, 6: {7, 8, 9, 10, 11, 12}},
    "g7": {1: {9, 10}, 2: {9, 10}, 3: {6, 7, 8, 9, 10}, 4: {6, 7, 8},
           5: {6, 7, 8}},
    "g8": {1: {10, 11}, 2: {6, 7, 8, 9}, 3: {6, 7, 10}, 4: {6, 7, 8, 9},
           5: {6, 7, 8, 9}},
}

PREDICT_TRUE = {"g3", "g4", "g5", "g6", "g7"}
PREDICT_FALSE = {"g1", "g2", "g8"}


class TestCountA:
    def test_g2_even_entry(self):
        assert count_a(structure("g2"), 1, 8) == 2

    def test_g8_even_entry(self):
        assert count_a(structure("g8"), 1, 8) == 2

    def test_g5_entry(self):
        assert count_a(structure("g5"), 4, 10) == 1

    def test_depth_one_relay_rejected(self):
        # vertex 7 is a child of 1 in g1's first tree, outside the a-domain
        with pytest.raises(DomainError):
            count_a(structure("g1"), 1, 7)

    def test_vertex_outside_tree_rejected(self):
        with pytest.raises(DomainError):
            count_a(structure("g1"), 2, 8)

    def test_inner_vertex_rejected(self):
        with pytest.raises(DomainError):
            count_a(structure("g1"), 1, 4)


class TestCountB:
    def test_g1_entry(self):
        assert count_b(structure("g1"), 2, 9) == 1

    def test_g3_entry(self):
        assert count_b(structure("g3"), 1, 4) == 0

    def test_g8_entry(self):
        assert count_b(structure("g8"), 3, 6) == 0

    def test_tree_member_rejected(self):
        with pytest.raises(DomainError):
            count_b(structure("g1"), 2, 10)

    def test_inner_always_rejected(self):
        # every inner vertex belongs to every tree
        ic = structure("g5")
        for i in range(1, ic.k + 1):
            for j in range(1, ic.k + 1):
                with pytest.raises((DomainError, GraphError)):
                    count_b(ic, i, j)


class TestCheckConditions:
    def test_a_tables(self, fixture_name):
        report = check_conditions(structure(fixture_name))
        assert report.a_table == EXPECTED_A[fixture_name]

    def test_b_domains_and_values(self, fixture_name):
        report = check_conditions(structure(fixture_name))
        domains: dict[int, set[int]] = {}
        for (i, j), value in report.b_table.items():
            domains.setdefault(i, set()).add(j)
            expected = EXPECTED_B_NONZERO[fixture_name].get((i, j), 0)
            assert value == expected, (i, j)
        ic = structure(fixture_name)
        full = {i: domains.get(i, set()) for i in range(1, ic.k + 1)}
        assert full == EXPECTED_B_DOMAINS[fixture_name]

    def test_g1_verdicts(self):
        report = check_conditions(structure("g1"))
        assert not report.c1_holds
        assert not report.c2_holds
        assert (1, 9, 2) in report.c1_violations
        assert set(report.c2_violations) == {(2, 9), (3, 9)}

    def test_g6_verdicts(self):
        report = check_conditions(structure("g6"))
        assert report.c1_holds and report.c2_holds

    def test_g8_verdicts(self):
        report = check_conditions(structure("g8"))
        assert not report.c1_holds
        assert report.c2_holds
        assert report.c1_violations == ((1, 8, 2),)

    def test_noninner_cycle_flags(self, fixture_name):
        report = check_conditions(structure(fixture_name))
        assert report.noninner_cycle_free == (fixture_name in {"g3", "g4"})

    def test_lemma_b_in_01(self, fixture_name):
        report = check_conditions(structure(fixture_name))
        assert all(v in (0, 1) for v in report.b_table.values())

    def test_variant_graph_rows(self):
        g, k = variant_graph()
        report = check_conditions(ic_structure(g, k))
        t1 = {j: c for (i, j), c in report.a_table.items() if i == 1}
        assert t1 == {9: 2, 10: 1, 11: 1, 12: 1, 13: 1}
        t2 = {j: c for (i, j), c in report.a_table.items() if i == 2}
        assert t2 == {11: 1, 12: 1, 13: 1}
        assert report.b_table[(2, 9)] == 1


class TestTheorem1Predict:
    def test_truth_sets(self, fixture_name):
        report = check_conditions(structure(fixture_name))
        assert theorem1_predict(report) == (fixture_name in PREDICT_TRUE)
        assert (not theorem1_predict(report)) == (fixture_name in PREDICT_FALSE)

    def test_two_clique_vacuous(self):
        report = check_conditions(ic_structure(two_clique(), 2))
        assert report.a_table == {}
        assert report.b_table == {}
        assert theorem1_predict(report)
        assert report.noninner_cycle_free

    def test_acyclic_relays_imply_conditions(self):
        # fixtures satisfying the relay-acyclicity hypothesis
        for name in ("g3", "g4"):
            report = check_conditions(structure(name))
            assert report.noninner_cycle_free
            assert report.c1_holds and report.c2_holds
            assert all(v == 1 for v in report.a_table.values())
