"""Factorizations, mutual actions, dimensions, algebra and Hopf maps."""

import numpy as np
import pytest

from bismash.bismash import (
    build_algebra,
    build_hopf_maps,
    cocommutativity_check,
    factorize,
    frobenius_bismash_report,
    kmm_dimensions,
    load_factorized_spec,
    mutual_actions,
    verify_action_axioms,
    verify_hopf_axioms,
)
from bismash.errors import (
    CapExceededError,
    FactorizationError,
    NotFrobeniusError,
)
from bismash.families import (
    agl1,
    alternating_group,
    base_factorized_triples,
    d4_as_c4_c2,
    symmetric_group,
)
from bismash.lingrp import build_pgl2
from bismash.permgrp import Perm, PermGroup


def s3_triple():
    s3 = symmetric_group(3)
    a3 = alternating_group(3)
    c2 = PermGroup([Perm([1, 0, 2])], degree=3)
    return s3, a3, c2


# -- factorize ---------------------------------------------------------------


def test_factorize_s3():
    s3, a3, c2 = s3_triple()
    fg = factorize(s3, a3, c2)
    assert len(fg.decomposition) == 6
    for g in fg.g_elements:
        f, l = fg.decompose(g)
        assert f * l == g
        assert f in fg.F and l in fg.L


def test_factorize_pgl24():
    pkg = build_pgl2(4)
    fg = factorize(pkg.G, pkg.C, pkg.S)
    assert fg.dim == 60
    for g in fg.g_elements:
        f, l = fg.decompose(g)
        assert f * l == g


def test_factorize_rejects_wrong_sizes():
    s3, a3, _ = s3_triple()
    with pytest.raises(FactorizationError):
        factorize(s3, a3, a3)


def test_factorize_rejects_nontrivial_intersection():
    s4 = symmetric_group(4)
    d4 = PermGroup([Perm([1, 2, 3, 0]), Perm([2, 1, 0, 3])], degree=4)
    c4 = PermGroup([Perm([1, 2, 3, 0])], degree=4)
    with pytest.raises(FactorizationError):
        factorize(s4, d4, c4)  # |D4 ∩ C4| = 4


def test_factorize_rejects_non_subgroups():
    s3, a3, c2 = s3_triple()
    other = PermGroup([Perm([0, 2, 1])], degree=3)
    v4ish = PermGroup([Perm([1, 0, 2, 3])], degree=4)
    with pytest.raises(FactorizationError):
        factorize(a3, a3, other)
    with pytest.raises(FactorizationError):
        factorize(s3, a3, v4ish)


# -- mutual actions ----------------------------------------------------------


def test_identity_row_and_column_act_trivially():
    s3, a3, c2 = s3_triple()
    fg = factorize(s3, a3, c2)
    acts = mutual_actions(fg)
    id_l = fg.l_index[Perm.identity(3)]
    id_f = fg.f_index[Perm.identity(3)]
    assert list(acts.left[id_l]) == list(range(fg.F.order))
    assert list(acts.right[:, id_f]) == list(range(fg.L.order))


def test_s3_actions_match_independent_product_scan():
    """Oracle: decompose every l*f by scanning all |F| x |L| products."""
    s3, a3, c2 = s3_triple()
    fg = factorize(s3, a3, c2)
    acts = fg.actions()
    for li, l in enumerate(fg.l_elements):
        for fi, f in enumerate(fg.f_elements):
            target = l * f
            found = [
                (fj, lj)
                for fj, fe in enumerate(fg.f_elements)
                for lj, le in enumerate(fg.l_elements)
                if fe * le == target
            ]
            assert len(found) == 1
            assert (acts.left[li, fi], acts.right[li, fi]) == found[0]


def test_direct_product_right_action_is_trivial():
    # G = Z3 x C2 with F = Z3 normal: h^[n] = h for all pairs
    n_gen = Perm([1, 2, 0, 3, 4])
    h_gen = Perm([0, 1, 2, 4, 3])
    G = PermGroup([n_gen, h_gen])
    fg = factorize(G, PermGroup([h_gen], degree=5), PermGroup([n_gen], degree=5))
    right = fg.actions().right
    for fi in range(fg.F.order):
        assert list(right[:, fi]) == list(range(fg.L.order))


def test_action_axioms_exhaustive_on_bundled_triples():
    for name, G, L, F in base_factorized_triples():
        fg = factorize(G, L, F)
        verify_action_axioms(fg)


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_unipotents_send_singer_generator_to_distinct_images(q):
    pkg = build_pgl2(q)
    fg = factorize(pkg.G, pkg.C, pkg.S)
    right = fg.actions().right
    xbar = fg.l_index[pkg.xbar]
    images = {int(right[xbar, fg.f_index[u]]) for u in pkg.unipotents}
    assert len(images) == q


# -- kmm dimensions ------------------------------------------------------------


def test_kmm_pgl24():
    pkg = build_pgl2(4)
    fg = factorize(pkg.G, pkg.C, pkg.S)
    assert list(kmm_dimensions(fg)) == [1, 1, 1, 3, 4, 4, 4]


def test_kmm_pgl22():
    pkg = build_pgl2(2)
    fg = factorize(pkg.G, pkg.C, pkg.S)
    assert list(kmm_dimensions(fg)) == [1, 1, 2]


def test_kmm_normal_factor_gives_copies_of_kernel_degrees():
    # G = S3 x C2, L = C2 component, F = S3 component: 2 copies of {1, 1, 2}
    a = Perm([1, 2, 0, 3, 4])
    b = Perm([1, 0, 2, 3, 4])
    c = Perm([0, 1, 2, 4, 3])
    G = PermGroup([a, b, c])
    assert G.order == 12
    fg = factorize(G, PermGroup([c], degree=5), PermGroup([a, b], degree=5))
    assert list(kmm_dimensions(fg)) == [1, 1, 1, 1, 2, 2]


@pytest.mark.parametrize("q", [2, 3])
def test_dual_orientation_cross_validates(q):
    # the dual algebra k^S # kC also passes the orbit-formula/oracle check
    from bismash import wedderburn

    pkg = build_pgl2(q)
    fg = factorize(pkg.G, pkg.S, pkg.C)
    dims = kmm_dimensions(fg)
    assert dims.sum_of_squares() == pkg.G.order
    algebra = build_algebra(fg).to_structure_algebra(fg.splitting_prime())
    assert wedderburn.decompose(algebra).degrees == dims


def test_kmm_accepts_custom_degree_oracle():
    s3, a3, c2 = s3_triple()
    fg = factorize(s3, c2, a3)
    calls = []

    def oracle(group):
        calls.append(group.order)
        return (1,) * group.order

    assert list(kmm_dimensions(fg, oracle)) == [1] * 6
    assert calls == [3, 3]  # both singleton orbits have full stabilizer A3


# -- the structure-constant algebra -------------------------------------------


def test_bismash_algebra_q2():
    pkg = build_pgl2(2)
    fg = factorize(pkg.G, pkg.C, pkg.S)
    alg = build_algebra(fg)
    assert alg.dim == 6
    assert len(alg.unit_indices) == 3


def test_trivial_factorization_group_algebra_side():
    # L = 1, F = G: products always fire, giving the group algebra of F
    s3 = symmetric_group(3)
    fg = factorize(s3, PermGroup([], degree=3), s3)
    alg = build_algebra(fg)
    assert np.all(alg.table >= 0)
    f_mul = fg.f_mul_table()
    assert np.array_equal(alg.table, f_mul)


def test_trivial_factorization_function_algebra_side():
    # L = G, F = 1: orthogonal idempotents (l#1)(l'#1) = delta (l#1)
    s3 = symmetric_group(3)
    fg = factorize(s3, s3, PermGroup([], degree=3))
    alg = build_algebra(fg)
    expected = np.full((6, 6), -1, dtype=np.int32)
    np.fill_diagonal(expected, np.arange(6))
    assert np.array_equal(alg.table, expected)


def test_build_algebra_cap():
    s3, a3, c2 = s3_triple()
    fg = factorize(s3, a3, c2)
    with pytest.raises(CapExceededError):
        build_algebra(fg, dim_cap=4)


def test_algebra_multiplication_matches_definition():
    s3, a3, c2 = s3_triple()
    fg = factorize(s3, a3, c2)
    alg = build_algebra(fg)
    right = fg.actions().right
    f_mul = fg.f_mul_table()
    nf = fg.F.order
    for l in range(fg.L.order):
        for f in range(nf):
            for lb in range(fg.L.order):
                for fb in range(nf):
                    got = alg.table[l * nf + f, lb * nf + fb]
                    if right[l, f] == lb:
                        assert got == l * nf + f_mul[f, fb]
                    else:
                        assert got == -1


# -- Hopf maps -----------------------------------------------------------------


def test_counit_is_delta_at_identity():
    pkg = build_pgl2(2)
    fg = factorize(pkg.G, pkg.C, pkg.S)
    maps = build_hopf_maps(fg)
    id_l = fg.l_index[Perm.identity(fg.G.degree)]
    nf = fg.F.order
    for b, value in enumerate(maps.counit):
        assert value == (1 if b // nf == id_l else 0)


def test_comultiplication_has_l_many_summands():
    pkg = build_pgl2(2)
    fg = factorize(pkg.G, pkg.C, pkg.S)
    maps = build_hopf_maps(fg)
    for terms in maps.comultiplication:
        assert len(terms) == fg.L.order == 3
        assert len(set(terms)) == len(terms)


def test_antipode_fixes_identity_basis_element():
    s3, a3, c2 = s3_triple()
    fg = factorize(s3, a3, c2)
    maps = build_hopf_maps(fg)
    id_l = fg.l_index[Perm.identity(3)]
    id_f = fg.f_index[Perm.identity(3)]
    b = id_l * fg.F.order + id_f
    assert maps.antipode[b] == b


def test_hopf_cap():
    pkg = build_pgl2(3)
    fg = factorize(pkg.G, pkg.C, pkg.S)
    with pytest.raises(CapExceededError):
        build_hopf_maps(fg, hopf_cap=8)


@pytest.mark.parametrize("q", [2, 3])
def test_hopf_axioms_exhaustive(q):
    pkg = build_pgl2(q)
    fg = factorize(pkg.G, pkg.C, pkg.S)
    verify_hopf_axioms(fg)


def test_hopf_axioms_on_semidirect_example():
    G, N, H = d4_as_c4_c2()
    fg = factorize(G, N, H)
    verify_hopf_axioms(fg)


# -- cocommutativity -----------------------------------------------------------


def test_cocommutative_iff_l_abelian_normal():
    s3, a3, c2 = s3_triple()
    res = cocommutativity_check(factorize(s3, a3, c2))
    assert res.cocommutative and res.l_abelian_normal
    res = cocommutativity_check(factorize(s3, c2, a3))
    assert not res.cocommutative and not res.l_abelian_normal
    pkg = build_pgl2(2)
    res = cocommutativity_check(factorize(pkg.G, pkg.C, pkg.S))
    assert res.cocommutative  # the Singer cycle is A3 inside PGL2(2) = S3


# -- Frobenius reports ----------------------------------------------------------


def test_frobenius_agl15():
    G, N, H = agl1(5)
    rep = frobenius_bismash_report(G, N, H)
    assert list(rep.kmm) == [1, 1, 1, 1, 4]
    assert rep.regular_orbit_count == 1
    assert rep.nstar_invariants == (5,)
    assert rep.series_orders == (5, 1)


def test_frobenius_s3():
    s3, a3, c2 = s3_triple()
    rep = frobenius_bismash_report(s3, a3, c2)
    assert list(rep.kmm) == [1, 1, 2]
    assert rep.nstar_order == 3


def test_frobenius_agl116_near_oracle_cap():
    # dim 240 sits just under the oracle cap; full dual-route agreement
    from bismash import wedderburn

    G, N, H = agl1(16)
    rep = frobenius_bismash_report(G, N, H)
    assert list(rep.kmm) == [1] * 15 + [15]
    assert rep.nstar_invariants == (2, 2, 2, 2)
    fg = rep.fg
    algebra = build_algebra(fg).to_structure_algebra(fg.splitting_prime())
    assert wedderburn.decompose(algebra).degrees == rep.kmm


def test_frobenius_rejects_direct_product():
    n_gen = Perm([1, 2, 0, 3, 4])
    h_gen = Perm([0, 1, 2, 4, 3])
    G = PermGroup([n_gen, h_gen])
    N = PermGroup([n_gen], degree=5)
    H = PermGroup([h_gen], degree=5)
    with pytest.raises(NotFrobeniusError):
        frobenius_bismash_report(G, N, H)


def test_frobenius_rejects_non_normal_kernel():
    s3, a3, c2 = s3_triple()
    with pytest.raises(NotFrobeniusError):
        frobenius_bismash_report(s3, c2, a3)


# -- spec files -----------------------------------------------------------------


def test_load_factorized_spec():
    data = {
        "degree": 3,
        "G": ["(1 2 3)", "(1 2)"],
        "L": ["(1 2 3)"],
        "F": ["(1 2)"],
    }
    G, L, F = load_factorized_spec(data)
    assert (G.order, L.order, F.order) == (6, 3, 2)
    fg = factorize(G, L, F)
    assert list(kmm_dimensions(fg)) == [1, 1, 2]
