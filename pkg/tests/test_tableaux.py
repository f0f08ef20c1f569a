import itertools

import pytest

from spcthecke import permutations as P
from spcthecke.compositions import BoundExceeded, Cell, compositions
from spcthecke.tableaux import (
    Spct,
    Srt,
    canonical_class,
    canonical_source_tableau,
    class_label,
    classify,
    col_word,
    decrement_part,
    descents,
    entry_one_cells,
    enumerate_spct,
    enumerate_srt,
    equivalence_classes,
    hatted_source_tableau,
    is_compatible,
    is_sigma_simple,
    is_valid_spct_rows,
    pacd_pairs,
    removable_nodes,
    source_ribbon_tableau,
)


def all_pairs(n):
    for alpha in compositions(n):
        for sigma in P.all_perms(len(alpha)):
            yield alpha, sigma


# ---------------------------------------------------------------------------
# enumeration


def test_enumerate_spct_single_column_forced():
    for sigma in P.all_perms(4):
        ts = enumerate_spct((1, 1, 1, 1), sigma)
        assert len(ts) == 1
        assert tuple(row[0] for row in ts[0].rows) == sigma


def test_enumerate_spct_examples():
    ts = enumerate_spct((2, 1), (2, 1))
    assert {t.rows for t in ts} == {((3, 2), (1,)), ((3, 1), (2,))}
    assert enumerate_spct((1, 2), (2, 1)) == ()


def test_enumerate_spct_brute_force_oracle():
    # independent oracle: filter all placements of 1..n into the diagram
    alpha, sigma = (2, 1), (2, 1)
    cells = [(1, 1), (1, 2), (2, 1)]
    found = set()
    for perm in itertools.permutations(range(1, 4)):
        rows = [[0, 0], [0]]
        for (r, c), v in zip(cells, perm):
            rows[r - 1][c - 1] = v
        if is_valid_spct_rows(tuple(map(tuple, rows)), sigma):
            found.add(tuple(map(tuple, rows)))
    assert found == {t.rows for t in enumerate_spct(alpha, sigma)}


def test_enumerate_spct_type_is_enforced():
    for alpha, sigma in all_pairs(5):
        for t in enumerate_spct(alpha, sigma):
            assert t.sigma == sigma
            assert is_valid_spct_rows(t.rows, sigma)


def test_enumerate_srt_counts():
    assert len(enumerate_srt((4,))) == 1
    assert len(enumerate_srt((1, 1, 1))) == 1
    # oracle: ribbon tableaux are counted by descent classes
    for n in range(1, 7):
        for alpha in compositions(n):
            expected = sum(
                1 for p in P.all_perms(n) if P.descent_set(p) == frozenset(set_of_alpha(alpha))
            )
            assert len(enumerate_srt(alpha)) == expected, alpha


def set_of_alpha(alpha):
    from spcthecke.compositions import set_of

    return set_of(alpha)


def test_enumerate_bound():
    with pytest.raises(BoundExceeded):
        enumerate_spct((5, 5), (1, 2))
    with pytest.raises(BoundExceeded):
        enumerate_srt((5, 5))
    assert len(enumerate_srt((5, 5), bound=10)) > 0


def test_srt_validity():
    t = Srt([[1, 3], [2, 8], [7], [6], [5], [4, 10], [9]])
    assert t.shape == (2, 2, 1, 1, 1, 2, 1)
    assert t.column_top_down(3) == [4, 5, 6, 7, 8]
    assert t.entry_from_bottom(1, 3) == 8
    assert t.entry_from_bottom(5, 3) == 4
    assert t.pos(9) == (7, 4)


# ---------------------------------------------------------------------------
# descents, attacking, classes


def test_descents_examples():
    d = descents(Spct([[3, 2], [1]]))
    assert d.descents == {1} and d.comp == (1, 2) and d.attacking == {1: False}
    d = descents(Spct([[3, 1], [2]]))
    assert d.descents == {2} and d.comp == (2, 1) and d.attacking == {2: True}
    single = Spct([list(range(5, 0, -1))])
    assert descents(single).descents == frozenset()
    assert descents(single).comp == (5,)


def test_class_label_examples():
    t = Spct([[4, 1], [6, 5, 3], [2]])
    assert str(class_label(t)) == "231 12 1"
    single = Spct([[4, 3, 2, 1]])
    assert str(class_label(single)) == "1 1 1 1"
    for alpha, sigma in all_pairs(5):
        for t in enumerate_spct(alpha, sigma):
            assert class_label(t).words[0] == sigma


def test_equivalence_classes_examples():
    cls = equivalence_classes((2, 1), (2, 1))
    assert len(cls) == 1 and len(cls[0].members) == 2
    cls = equivalence_classes((1, 1, 1), (2, 3, 1))
    assert len(cls) == 1 and len(cls[0].members) == 1
    # class count equals component count for ((2,2), id)
    from spcthecke.modules import action_components

    assert len(equivalence_classes((2, 2), (1, 2))) == len(action_components((2, 2), (1, 2)))


def test_classify_examples():
    assert classify(Spct([[3, 2], [1]])) == "source"
    assert classify(Spct([[3, 1], [2]])) == "sink"
    assert classify(Spct([[4, 3, 2, 1]])) == "both"


def test_col_word():
    t = Spct([[4, 1], [6, 5, 3], [2]])
    assert col_word(t) == (4, 6, 2, 1, 5, 3)


def test_unique_source_and_sink_per_class():
    for n in range(1, 7):
        for alpha, sigma in all_pairs(n):
            if not is_compatible(alpha, sigma):
                continue
            for cl in equivalence_classes(alpha, sigma):
                kinds = [classify(t) for t in cl.members]
                assert sum(k in ("source", "both") for k in kinds) == 1
                assert sum(k in ("sink", "both") for k in kinds) == 1


# ---------------------------------------------------------------------------
# shape/type predicates


def test_is_compatible_examples():
    assert not is_compatible((1, 2, 1, 3), (2, 1, 3, 4))
    assert is_compatible((1, 1, 2, 3), (2, 1, 3, 4))
    for n in range(1, 7):
        for lam in compositions(n):
            if all(a >= b for a, b in zip(lam, lam[1:])):
                assert is_compatible(lam, P.longest_element(len(lam)))


def test_pacd_pairs_examples():
    pairs = pacd_pairs((3, 3, 1, 2), (2, 1, 3, 4))
    by_idx = {(p.i, p.j): p for p in pairs}
    assert (1, 4) in by_idx and by_idx[1, 4].c1 == (3,)
    assert all(p.witnessed for p in pairs)

    pairs = pacd_pairs((3, 1, 2, 2), (2, 1, 3, 4))
    by_idx = {(p.i, p.j): p for p in pairs}
    assert (1, 4) in by_idx and not by_idx[1, 4].witnessed

    assert pacd_pairs((1, 1, 2, 3), (2, 1, 3, 4)) == []


def test_is_sigma_simple_examples():
    assert is_sigma_simple((3, 3, 1, 2), (2, 1, 3, 4))
    assert not is_sigma_simple((3, 1, 2, 2), (2, 1, 3, 4))
    # partitions are simple for the reversing type: no obstruction pairs
    for n in range(1, 7):
        for lam in compositions(n):
            if all(a >= b for a, b in zip(lam, lam[1:])):
                w0 = P.longest_element(len(lam))
                assert pacd_pairs(lam, w0) == []
                assert is_sigma_simple(lam, w0)


def test_removable_nodes_examples():
    cells = removable_nodes((4, 1, 2, 2), (2, 1, 3, 4))
    assert [(c.row, c.col) for c in cells] == [(1, 4), (2, 1)]
    assert removable_nodes((5,), (1,)) == [Cell(1, 5, "cd")]
    # a type value of one always marks its part removable
    cells = removable_nodes((2, 2), (1, 2))
    assert [(c.row, c.col) for c in cells] == [(1, 2), (2, 2)]


def test_removable_nodes_are_entry_one_cells():
    for n in range(1, 7):
        for alpha, sigma in all_pairs(n):
            if not is_compatible(alpha, sigma):
                continue
            assert set(removable_nodes(alpha, sigma)) == entry_one_cells(alpha, sigma)


def test_decrement_keeps_simplicity():
    for n in range(2, 8):
        for alpha, sigma in all_pairs(n):
            if not is_compatible(alpha, sigma) or not is_sigma_simple(alpha, sigma):
                continue
            for cell in removable_nodes(alpha, sigma):
                ahat, bsig = decrement_part(alpha, sigma, cell.row)
                if ahat:
                    assert is_compatible(ahat, bsig)
                    assert is_sigma_simple(ahat, bsig), (alpha, sigma, cell)


def test_removable_iff_gap_conditions_when_simple():
    # restatement of the two-sided characterisation for simple pairs
    for n in range(1, 8):
        for alpha, sigma in all_pairs(n):
            if not is_compatible(alpha, sigma) or not is_sigma_simple(alpha, sigma):
                continue
            removable_rows = {c.row for c in removable_nodes(alpha, sigma)}
            for j in range(1, len(alpha) + 1):
                if sigma[j - 1] == 1:
                    assert j in removable_rows
                    continue
                cond_i = all(
                    alpha[i - 1] <= alpha[j - 1] - 2
                    for i in range(1, j)
                    if sigma[i - 1] < sigma[j - 1]
                )
                cond_ii = all(
                    alpha[i - 1] != alpha[j - 1]
                    for i in range(j + 1, len(alpha) + 1)
                    if sigma[i - 1] < sigma[j - 1]
                )
                assert (j in removable_rows) == (cond_i and cond_ii), (alpha, sigma, j)


def test_source_has_entry_one_in_first_type_row_when_simple():
    for n in range(1, 7):
        for alpha, sigma in all_pairs(n):
            if not is_compatible(alpha, sigma) or not is_sigma_simple(alpha, sigma):
                continue
            r = P.inverse(sigma)[0]
            for t in enumerate_spct(alpha, sigma):
                if classify(t) in ("source", "both"):
                    assert t.pos(1) == (r, alpha[r - 1])


# ---------------------------------------------------------------------------
# canonical and hatted sources


def test_canonical_source_examples():
    assert canonical_source_tableau((1, 3, 2, 4), (1, 3, 2, 4)).rows == (
        (1,),
        (6, 5, 4),
        (3, 2),
        (10, 9, 8, 7),
    )
    assert canonical_source_tableau((2, 4, 4, 2, 3), (2, 4, 3, 1, 5)).rows == (
        (4, 3),
        (12, 11, 10, 9),
        (8, 7, 6, 5),
        (2, 1),
        (15, 14, 13),
    )
    assert canonical_source_tableau((2, 1), (2, 1)).rows == ((3, 2), (1,))


def test_canonical_source_is_a_source_in_its_class():
    for n in range(1, 7):
        for alpha, sigma in all_pairs(n):
            if not is_compatible(alpha, sigma):
                continue
            tc = canonical_source_tableau(alpha, sigma)
            assert classify(tc) in ("source", "both")
            assert canonical_class(alpha, sigma).source == tc


def test_hatted_source_examples():
    h = hatted_source_tableau((1, 3, 2, 4), (1, 3, 2, 4))
    assert h.rows == ((2,), (7, 6, 5), (4, 3), (10, 9, 8, 1))
    assert not h.valid  # row-decrease fails at the appended box

    h = hatted_source_tableau((2, 2), (1, 2))
    assert h.rows == ((3, 2), (4, 1)) and h.valid
    assert classify(h.spct) in ("source", "both")

    with pytest.raises(ValueError):
        hatted_source_tableau((2, 1), (1, 2))  # last-type row has one box


def test_hatted_restricted_assembly_matches_worked_example():
    # restrict to the rows whose type values sit between the obstruction
    # pair's, run the hatted construction there, shift, and re-embed
    h = hatted_source_tableau((4, 4, 3), (2, 1, 3))
    assert h.valid
    shifted = [tuple(v + 4 for v in row) for row in h.rows]
    rows = ((4, 3), shifted[0], shifted[1], (2, 1), shifted[2])
    assert rows == ((4, 3), (13, 12, 11, 10), (9, 8, 7, 6), (2, 1), (15, 14, 5))
    assert is_valid_spct_rows(rows, (2, 4, 3, 1, 5))
    assert classify(Spct(rows)) == "source"


def test_source_ribbon_tableau():
    t = source_ribbon_tableau((2, 1))
    assert t.rows == ((1, 3), (2,))
    t = source_ribbon_tableau((1, 3, 2))
    # columns, left to right, are consecutive blocks increasing downward
    for c in range(1, t.num_columns() + 1):
        col = t.column_top_down(c)
        assert col == sorted(col)
    flat = [v for c in range(1, t.num_columns() + 1) for v in t.column_top_down(c)]
    assert flat == list(range(1, t.n + 1))
