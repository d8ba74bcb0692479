"""Field arithmetic: construction, ops, orders, primitive quadratics."""

import random

import pytest

from bismash.errors import CapExceededError
from bismash.gf import (
    QuadraticPoly,
    element_order,
    field_create,
    find_primitive_quadratic,
    multiplicative_generator,
)


def brute_force_irreducibles(p, h):
    """Independent scan: monic degree-h polys with no monic proper factor."""

    def poly_from_int(v, deg):
        coeffs = []
        for _ in range(deg):
            v, c = divmod(v, p)
            coeffs.append(c)
        return coeffs

    def mul(a, b):
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
        return out

    monics = {
        d: [poly_from_int(v, d) + [1] for v in range(p**d)] for d in range(1, h)
    }
    out = []
    for v in range(p**h):
        cand = poly_from_int(v, h) + [1]
        reducible = False
        for d in range(1, h // 2 + 1):
            for a in monics[d]:
                for b in monics[h - d]:
                    if mul(a, b) == cand:
                        reducible = True
                        break
                if reducible:
                    break
            if reducible:
                break
        if not reducible:
            out.append(tuple(cand))
    return out


def test_gf2_trivial_modulus():
    ctx = field_create(2, 1)
    assert (ctx.p, ctx.h, ctx.q) == (2, 1, 2)
    assert ctx.modulus == (0, 1)  # the polynomial X


def test_gf4_modulus_matches_brute_force_scan():
    expected = brute_force_irreducibles(2, 2)
    assert expected == [(1, 1, 1)]  # X^2 + X + 1 is the only one
    ctx = field_create(2, 2)
    assert ctx.modulus == (1, 1, 1)


def test_gf8_and_gf27_moduli_are_least_irreducible():
    assert field_create(2, 3).modulus == brute_force_irreducibles(2, 3)[0]
    assert field_create(3, 3).modulus == brute_force_irreducibles(3, 3)[0]


def test_non_prime_p_rejected():
    with pytest.raises(ValueError):
        field_create(4, 1)


def test_bad_h_and_cap():
    with pytest.raises(ValueError):
        field_create(2, 0)
    with pytest.raises(CapExceededError):
        field_create(2, 17)


def test_mod5_arithmetic():
    ctx = field_create(5, 1)
    three, four = ctx.from_int(3), ctx.from_int(4)
    assert int(three * four) == 2
    assert int(three + four) == 2
    assert int(-three) == 2


def test_gf4_generator_squares_to_generator_plus_one():
    ctx = field_create(2, 2)
    g = ctx.element((0, 1))  # the class of X, a root of X^2 + X + 1
    assert (g * g).coeffs == (1, 1)  # X^2 = X + 1 mod the modulus


def test_inverse_mod7():
    ctx = field_create(7, 1)
    assert int(ctx.from_int(3).inverse()) == 5


def test_inverse_of_zero_rejected():
    ctx = field_create(5, 1)
    with pytest.raises(ZeroDivisionError):
        ctx.zero.inverse()


def test_context_mismatch_rejected():
    a = field_create(5, 1).one
    b = field_create(7, 1).one
    with pytest.raises(ValueError):
        a + b


def test_element_orders_mod5():
    ctx = field_create(5, 1)
    assert element_order(ctx.one) == 1
    assert element_order(ctx.from_int(2)) == 4  # 2, 4, 3, 1


def test_gf9_generator_order_by_exhausting_powers():
    ctx = field_create(3, 2)
    g = multiplicative_generator(ctx)
    # independent oracle: walk all powers explicitly
    powers = [ctx.one]
    while True:
        nxt = powers[-1] * g
        if nxt == ctx.one:
            break
        powers.append(nxt)
    assert len(powers) == 8
    assert element_order(g) == 8


def test_field_axioms_random_sample():
    rng = random.Random(7)
    for p, h in ((5, 1), (2, 3), (3, 2)):
        ctx = field_create(p, h)
        elems = ctx.elements()
        for _ in range(200):
            a, b, c = (rng.choice(elems) for _ in range(3))
            assert a + b == b + a
            assert a * b == b * a
            assert (a + b) + c == a + (b + c)
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c


def test_order_divides_group_order():
    for p, h in ((5, 1), (2, 3), (3, 2)):
        ctx = field_create(p, h)
        for a in ctx.elements()[1:]:
            assert (ctx.q - 1) % element_order(a) == 0


def brute_companion_order(poly: QuadraticPoly):
    """Repeated 2x2 multiplication until the identity comes back."""
    ctx = poly.mu.ctx
    ident = (ctx.one, ctx.zero, ctx.zero, ctx.one)
    m = poly.companion()

    def mul(x, y):
        return (
            x[0] * y[0] + x[1] * y[2],
            x[0] * y[1] + x[1] * y[3],
            x[2] * y[0] + x[3] * y[2],
            x[2] * y[1] + x[3] * y[3],
        )

    acc = m
    k = 1
    while acc != ident:
        acc = mul(acc, m)
        k += 1
        assert k <= ctx.q**2  # singular matrices never return
    return k


def test_primitive_quadratic_q2():
    ctx = field_create(2, 1)
    poly = find_primitive_quadratic(ctx)
    assert (int(poly.mu), int(poly.lam)) == (1, 1)  # X^2 + X + 1
    assert brute_companion_order(poly) == 3


@pytest.mark.parametrize("p,h", [(3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)])
def test_primitive_quadratic_has_full_order(p, h):
    ctx = field_create(p, h)
    poly = find_primitive_quadratic(ctx)
    assert brute_companion_order(poly) == ctx.q**2 - 1


@pytest.mark.parametrize("p,h", [(2, 1), (3, 1), (2, 2), (5, 1)])
def test_primitive_quadratic_irreducible_no_roots(p, h):
    ctx = field_create(p, h)
    poly = find_primitive_quadratic(ctx)
    for t in ctx.elements():
        assert t * t + poly.mu * t + poly.lam, f"root {t} found"


def test_determinism_bit_identical():
    a, b = field_create(3, 2), field_create(3, 2)
    assert a.modulus == b.modulus and a == b
    pa = find_primitive_quadratic(a)
    pb = find_primitive_quadratic(b)
    assert (pa.mu.coeffs, pa.lam.coeffs) == (pb.mu.coeffs, pb.lam.coeffs)
