"""Bundled families: orders, Frobenius structure, random factorizations."""

import pytest

from bismash.bismash import factorize, verify_action_axioms
from bismash.families import (
    agl1,
    base_factorized_triples,
    builtin_frobenius,
    d4_as_c4_c2,
    dihedral_group,
    heis7_z3,
    heisenberg,
    random_factorized_triples,
)


@pytest.mark.parametrize("q", [3, 4, 5, 7, 8, 9])
def test_agl1_orders(q):
    G, N, H = agl1(q)
    assert (G.order, N.order, H.order) == (q * (q - 1), q, q - 1)
    assert N.is_subgroup_of(G) and H.is_subgroup_of(G)


def test_agl1_rejects_non_prime_power():
    with pytest.raises(ValueError):
        agl1(6)


@pytest.mark.parametrize("p", [3, 5, 7])
def test_heisenberg_order_and_class(p):
    n = heisenberg(p)
    assert n.order == p**3
    assert not n.is_abelian()
    assert all(g.order() == p for g in n.generators)


def test_heis7_z3_structure():
    G, N, H = heis7_z3()
    assert (G.order, N.order, H.order) == (1029, 343, 3)
    assert N.is_subgroup_of(G) and H.is_subgroup_of(G)


def test_d4_shape():
    G, N, H = d4_as_c4_c2()
    assert (G.order, N.order, H.order) == (8, 4, 2)


def test_dihedral_orders():
    for n in (3, 4, 5, 6):
        assert dihedral_group(n).order == 2 * n


def test_builtin_names():
    G, N, H = builtin_frobenius("agl1-7")
    assert G.order == 42
    G, N, H = builtin_frobenius("heis7-z3")
    assert G.order == 1029
    with pytest.raises(ValueError):
        builtin_frobenius("agl1-6")
    with pytest.raises(ValueError):
        builtin_frobenius("nonsense")
    with pytest.raises(ValueError):
        builtin_frobenius("agl1-2")  # trivial complement


def test_base_triples_all_factorize():
    for name, G, L, F in base_factorized_triples():
        assert G.order <= 200, name
        fg = factorize(G, L, F)
        assert fg.dim == G.order, name


def test_random_triples_factorize_and_satisfy_axioms():
    triples = random_factorized_triples(seed=42, count=6)
    assert len(triples) == 6
    for name, G, L, F in triples:
        fg = factorize(G, L, F)
        verify_action_axioms(fg)


def test_random_triples_deterministic_per_seed():
    a = random_factorized_triples(seed=7, count=4)
    b = random_factorized_triples(seed=7, count=4)
    for (na, Ga, La, Fa), (nb, Gb, Lb, Fb) in zip(a, b):
        assert na == nb
        assert La.generators == Lb.generators
        assert Fa.generators == Fb.generators
