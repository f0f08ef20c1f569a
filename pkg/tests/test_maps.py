import pytest

from spcthecke import permutations as P
from spcthecke.compositions import compositions, complement_of, partitions, sorted_parts
from spcthecke.maps import (
    MapWitness,
    iota_map,
    iota_sign,
    omega_set,
    phi,
    prc_phi_for_target,
    prc_phi_map,
    psi,
    rho,
    ribbon_to_spct,
    spct_to_ribbon,
    star_distances,
    tau_of_ribbon,
)
from spcthecke.tableaux import (
    Spct,
    Srt,
    canonical_source_tableau,
    descent_set,
    enumerate_spct,
    enumerate_srt,
    is_compatible,
    source_ribbon_tableau,
)


# ---------------------------------------------------------------------------
# the column sort and its inverse


def test_worked_triple():
    t = Spct([[5, 2], [7, 6, 4], [3, 1]])
    assert t.sigma == (2, 3, 1)
    r = rho(t)
    assert r.rows == ((7, 6, 4), (5, 2), (3, 1))
    assert r.shape == (3, 2, 2) and r.sigma == (3, 2, 1)
    out = psi(t, (1, 2, 3))
    assert out.rows == ((3, 2), (5, 1), (7, 6, 4))
    assert out.shape == (2, 2, 3) and out.sigma == (1, 2, 3)
    # round trips
    assert phi(r, (2, 3, 1)) == t
    assert psi(t, (2, 3, 1)) == t
    assert psi(out, (2, 3, 1)) == t


def test_rho_fixes_sorted_inputs():
    t = canonical_source_tableau((3, 2), (2, 1))
    assert rho(t) == t
    single = Spct([[4, 3, 2, 1]])
    assert rho(single) == single
    assert phi(single, (1,)) == single


def test_phi_rejects_partition_shape_violation():
    with pytest.raises(ValueError):
        phi(Spct([[2], [3, 1]]), (1, 2))  # shape (1, 2) is not a partition


def test_phi_witness_trace():
    w = MapWitness("phi", [[7, 6, 4], [5, 2], [3, 1]], None)
    phi(Spct([[7, 6, 4], [5, 2], [3, 1]]), (1, 2, 3), witness=w)
    assert w.trace[0]["column"] == 1
    assert {p["value"] for p in w.trace[1]["placed"]} == {2, 6, 1}


def test_psi_image_identity_small():
    # one-step image: both shapes in the operator fiber appear, nothing else
    shorter = (1, 2)
    image = {psi(t, shorter) for t in enumerate_spct((2, 1), (2, 1))}
    expected = set(enumerate_spct((2, 1), shorter)) | set(enumerate_spct((1, 2), shorter))
    assert image == expected
    assert len(image) == 2 == 1 + 1


def test_psi_preserves_descents_exhaustive():
    for n in range(1, 6):
        for lam in partitions(n):
            for s1 in P.all_perms(len(lam)):
                for s2 in P.all_perms(len(lam)):
                    for alpha in compositions(n):
                        if sorted_parts(alpha) != lam:
                            continue
                        for t in enumerate_spct(alpha, s1):
                            assert descent_set(psi(t, s2)) == descent_set(t)


# ---------------------------------------------------------------------------
# ribbon transpose


def test_ribbon_transpose_worked_examples():
    sigma = (2, 3, 1, 4)
    T1 = Srt([[1, 3], [2, 8], [7], [6], [5], [4, 10], [9]])
    T2 = Srt([[1, 3], [2, 9], [8], [7], [6], [5, 10], [4]])
    T3 = Srt([[2, 6], [1, 10], [8], [7], [5], [4, 9], [3]])
    assert tau_of_ribbon(T1, sigma) == ((3, 2), (8, 7, 6, 5, 4), (1,), (10, 9))
    assert ribbon_to_spct(T1, sigma) is not None
    assert tau_of_ribbon(T2, sigma) == ((3, 2), (9, 8, 7, 6, 5), (1,), (10, 4))
    assert ribbon_to_spct(T2, sigma) is not None
    assert ribbon_to_spct(T3, sigma) is None  # triple condition fails
    assert T3 in omega_set((2, 2, 1, 1, 1, 2, 1), sigma, bound=10)


def test_source_ribbon_maps_to_canonical_source():
    for n in range(1, 7):
        for alpha in compositions(n):
            for sigma in P.all_perms(len(complement_of(alpha))):
                beta = P.compose_right_action(complement_of(alpha), sigma)
                t = ribbon_to_spct(source_ribbon_tableau(alpha), sigma)
                if is_compatible(beta, sigma):
                    assert t == canonical_source_tableau(beta, sigma)
                else:
                    assert t is None


def test_spct_to_ribbon_inverts_transpose():
    for n in range(1, 7):
        for alpha in compositions(n):
            for sigma in P.all_perms(len(complement_of(alpha))):
                for T in enumerate_srt(alpha):
                    t = ribbon_to_spct(T, sigma)
                    if t is not None:
                        assert spct_to_ribbon(t, sigma) == T


def test_omega_examples():
    sigma = (2, 3, 1, 4)
    T0 = source_ribbon_tableau((2, 2, 1, 1, 1, 2, 1))
    assert T0 not in omega_set((2, 2, 1, 1, 1, 2, 1), sigma, bound=10)
    assert omega_set((4,), (1, 2, 3, 4)) == []


def test_prc_phi_examples():
    res = prc_phi_map((1, 1), (1,))
    assert res.ok and res.target_dim == 1 and not res.linmap.matrix.is_zero()
    for sigma in P.all_perms(2):
        if is_compatible((2, 2), sigma):
            res = prc_phi_for_target((2, 2), sigma)
            assert res.ok
    with pytest.raises(ValueError):
        prc_phi_map((1, 2), (2, 1))  # incompatible target


def test_transpose_is_zero_for_incompatible_targets():
    for n in range(1, 6):
        for alpha in compositions(n):
            for sigma in P.all_perms(len(complement_of(alpha))):
                beta = P.compose_right_action(complement_of(alpha), sigma)
                if is_compatible(beta, sigma):
                    continue
                assert all(ribbon_to_spct(T, sigma) is None for T in enumerate_srt(alpha))


# ---------------------------------------------------------------------------
# the sign isomorphism


def test_iota_signs():
    t0 = source_ribbon_tableau((2, 1))
    assert iota_sign(t0) == 1
    other = t0.swap_values(1)
    assert iota_sign(other) == -1


def test_iota_conjugates_variants():
    lm = iota_map((2, 1))
    assert lm.intertwines
    theta_mod = lm.source
    star_mod = lm.target
    inv = lm.matrix  # diagonal signs are their own inverse
    for i in range(1, 3):
        assert lm.matrix * theta_mod.gen(i) == star_mod.gen(i) * lm.matrix
        assert inv * star_mod.gen(i) * inv == theta_mod.gen(i)


def test_star_distances_cover_all():
    for alpha in [(3,), (2, 2), (1, 2, 1), (2, 1, 1)]:
        dist = star_distances(alpha)
        assert set(dist) == set(enumerate_srt(alpha))
        assert dist[source_ribbon_tableau(alpha)] == 0


# ---------------------------------------------------------------------------
# column propagation of the one-step type change


def test_one_step_column_propagation():
    """Per column, the one-step type change acts row-locally.

    For a type descending at i, each column of the image either equals the
    input column or differs by swapping the entries in rows i and i+1; and
    once some column is left unchanged, all later columns are too.
    """
    for n in range(1, 7):
        for alpha in compositions(n):
            for sigma in P.all_perms(len(alpha)):
                for i in range(1, len(alpha)):
                    if sigma[i - 1] < sigma[i]:
                        continue
                    shorter = P.times_s(sigma, i)
                    p = min(alpha[i - 1], alpha[i])
                    for t in enumerate_spct(alpha, sigma):
                        u = psi(t, shorter)
                        stabilised = False
                        for c in range(1, max(t.num_columns(), u.num_columns()) + 1):
                            tc, uc = t.column(c), u.column(c)
                            assert sorted(tc) == sorted(uc), "column contents moved"
                            if tc == uc:
                                stabilised = True
                                continue
                            # a change must swap the two acted-on rows, which
                            # both own this column, at their list positions
                            assert c <= p and not stabilised, (alpha, sigma, i, t.rows, c)
                            pos = sum(1 for r in range(i - 1) if alpha[r] >= c)
                            swapped = list(tc)
                            swapped[pos], swapped[pos + 1] = swapped[pos + 1], swapped[pos]
                            assert swapped == uc, (alpha, sigma, i, t.rows, c)


def test_column_sort_bijection_counts_n7():
    # both-sides exhaustion one size past the acceptance bound
    n = 7
    for lam in partitions(n):
        w0 = P.longest_element(len(lam))
        target = set(enumerate_spct(lam, w0))
        for sigma in P.all_perms(len(lam)):
            images = set()
            total = 0
            for alpha in compositions(n):
                if sorted_parts(alpha) != lam:
                    continue
                ts = enumerate_spct(alpha, sigma)
                total += len(ts)
                images.update(rho(t) for t in ts)
            assert total == len(target)
            assert images == target
