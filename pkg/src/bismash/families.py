"""Built-in group families and bundled factorized triples.

Everything here is deterministic: the same name or seed always produces the
same permutations, so downstream reports are byte-reproducible.
"""

from __future__ import annotations

import random

from .errors import FactorizationError
from .gf import field_create, multiplicative_generator
from .lingrp import build_pgl2
from .numutil import prime_power
from .permgrp import Perm, PermGroup, conjugate


def symmetric_group(n: int) -> PermGroup:
    if n < 1:
        raise ValueError("n must be positive")
    gens = []
    if n >= 2:
        gens.append(Perm([1, 0] + list(range(2, n))))
    if n >= 3:
        gens.append(Perm(list(range(1, n)) + [0]))
    return PermGroup(gens, degree=n)


def cyclic_group(n: int) -> PermGroup:
    return PermGroup([Perm(list(range(1, n)) + [0])], degree=n)


def alternating_group(n: int) -> PermGroup:
    if n < 3:
        return PermGroup([], degree=max(n, 1))
    gens = [Perm([1, 2, 0] + list(range(3, n)))]
    if n >= 4:
        if n % 2:
            gens.append(Perm(list(range(1, n)) + [0]))  # n-cycle is even
        else:
            gens.append(Perm([0] + list(range(2, n)) + [1]))
    return PermGroup(gens, degree=n)


def dihedral_group(n: int) -> PermGroup:
    """Symmetries of an n-gon on n points."""
    rot = Perm(list(range(1, n)) + [0])
    ref = Perm([(n - i) % n for i in range(n)])
    return PermGroup([rot, ref], degree=n)


def agl1(q: int) -> tuple[PermGroup, PermGroup, PermGroup]:
    """AGL(1, q) = N x| H acting on GF(q): returns (G, N, H).

    N is the translation group (regular, order q); H fixes 0 and is cyclic
    of order q - 1, acting fixed-point-freely, so G is Frobenius.
    """
    pp = prime_power(q)
    if pp is None:
        raise ValueError(f"q = {q} is not a prime power")
    p, h = pp
    ctx = field_create(p, h)
    elems = ctx.elements()
    index = {e: i for i, e in enumerate(elems)}
    translations = []
    for i in range(h):
        shift = ctx.from_int(p**i)  # additive basis vector X^i
        translations.append(Perm(index[e + shift] for e in elems))
    N = PermGroup(translations, degree=q)
    if q > 2:
        g0 = multiplicative_generator(ctx)
        mult = Perm(index[e * g0] for e in elems)
        H = PermGroup([mult], degree=q)
    else:
        H = PermGroup([], degree=q)
    G = PermGroup([*translations, *H.generators], degree=q)
    return G, N, H


def heisenberg(p: int) -> PermGroup:
    """Heisenberg group of order p^3, acting on itself by right translation.

    Elements are triples (a, b, c) with (a, b, c)(a', b', c') =
    (a+a', b+b', c+c'+a*b'); the point index is a*p^2 + b*p + c.
    """

    def mul(x, y):
        return (
            (x[0] + y[0]) % p,
            (x[1] + y[1]) % p,
            (x[2] + y[2] + x[0] * y[1]) % p,
        )

    points = [(a, b, c) for a in range(p) for b in range(p) for c in range(p)]
    index = {pt: i for i, pt in enumerate(points)}
    gens = []
    for g in ((1, 0, 0), (0, 1, 0)):
        gens.append(Perm(index[mul(x, g)] for x in points))
    return PermGroup(gens, degree=p**3)


def heis7_z3() -> tuple[PermGroup, PermGroup, PermGroup]:
    """Heisenberg(7) x| Z_3 (order 1029): returns (G, N, H).

    The order-3 automorphism (a, b, c) -> (2a, 2b, 4c) is fixed-point-free
    (2 has order 3 mod 7), making G a Frobenius group with kernel N.
    """
    p = 7
    zeta = 2
    N = heisenberg(p)
    points = [(a, b, c) for a in range(p) for b in range(p) for c in range(p)]
    index = {pt: i for i, pt in enumerate(points)}
    phi = Perm(
        index[(zeta * a % p, zeta * b % p, zeta * zeta * c % p)]
        for (a, b, c) in points
    )
    H = PermGroup([phi], degree=p**3)
    G = PermGroup([*N.generators, phi], degree=p**3)
    return G, N, H


def d4_as_c4_c2() -> tuple[PermGroup, PermGroup, PermGroup]:
    """D4 = C4 x| C2 on the square: returns (G, N, H)."""
    rot = Perm([1, 2, 3, 0])
    ref = Perm([0, 3, 2, 1])
    G = PermGroup([rot, ref], degree=4)
    return G, PermGroup([rot], degree=4), PermGroup([ref], degree=4)


def builtin_frobenius(name: str) -> tuple[PermGroup, PermGroup, PermGroup]:
    """Resolve a built-in Frobenius family name: agl1-<q> or heis7-z3."""
    if name == "heis7-z3":
        return heis7_z3()
    if name.startswith("agl1-"):
        try:
            q = int(name[5:])
        except ValueError:
            raise ValueError(f"unknown Frobenius family {name!r}") from None
        G, N, H = agl1(q)
        if H.order <= 1:
            raise ValueError(f"agl1-{q} is not Frobenius (trivial complement)")
        return G, N, H
    raise ValueError(f"unknown Frobenius family {name!r}")


def base_factorized_triples() -> list[tuple[str, PermGroup, PermGroup, PermGroup]]:
    """Bundled exact factorizations (G, L, F) at desk scale (|G| <= 200)."""
    out = []

    s3 = symmetric_group(3)
    a3 = alternating_group(3)
    c2 = PermGroup([Perm([1, 0, 2])], degree=3)
    out.append(("s3:a3*c2", s3, a3, c2))
    out.append(("s3:c2*a3", s3, c2, a3))

    g, n, h = d4_as_c4_c2()
    out.append(("d4:c2*c4", g, h, n))
    out.append(("d4:c4*c2", g, n, h))

    s4 = symmetric_group(4)
    d4 = PermGroup([Perm([1, 2, 3, 0]), Perm([2, 1, 0, 3])], degree=4)
    c3 = PermGroup([Perm([1, 2, 0, 3])], degree=4)
    out.append(("s4:d4*c3", s4, d4, c3))
    c4 = PermGroup([Perm([1, 2, 3, 0])], degree=4)
    s3_in_s4 = PermGroup([Perm([1, 0, 2, 3]), Perm([1, 2, 0, 3])], degree=4)
    out.append(("s4:c4*s3", s4, c4, s3_in_s4))

    a4 = alternating_group(4)
    v4 = PermGroup([Perm([1, 0, 3, 2]), Perm([2, 3, 0, 1])], degree=4)
    c3_4 = PermGroup([Perm([1, 2, 0, 3])], degree=4)
    out.append(("a4:v4*c3", a4, v4, c3_4))

    a5 = alternating_group(5)
    a4_in_a5 = PermGroup([Perm([1, 2, 0, 3, 4]), Perm([1, 0, 3, 2, 4])], degree=5)
    c5 = PermGroup([Perm([1, 2, 3, 4, 0])], degree=5)
    out.append(("a5:a4*c5", a5, a4_in_a5, c5))

    g, n, h = agl1(5)
    out.append(("agl15:z4*z5", g, h, n))
    out.append(("agl15:z5*z4", g, n, h))

    s5 = symmetric_group(5)
    f20 = PermGroup([Perm([1, 2, 3, 4, 0]), Perm([0, 2, 4, 1, 3])], degree=5)
    s3_in_s5 = PermGroup([Perm([1, 0, 2, 3, 4]), Perm([1, 2, 0, 3, 4])], degree=5)
    out.append(("s5:f20*s3", s5, f20, s3_in_s5))

    return out


def random_factorized_triples(seed: int, count: int):
    """Seeded random exact factorizations from the bundled bank.

    Each draw conjugates both factors by a common random element and may
    swap their roles; both moves preserve exactness (G = LF implies
    G = L^w F^w and G = FL).
    """
    rng = random.Random(seed)
    bank = base_factorized_triples()
    out = []
    for i in range(count):
        name, G, L, F = bank[rng.randrange(len(bank))]
        w = G.elements()[rng.randrange(G.order)]
        Lc = PermGroup([conjugate(x, w) for x in L.generators], degree=G.degree)
        Fc = PermGroup([conjugate(x, w) for x in F.generators], degree=G.degree)
        if Lc.order != L.order or Fc.order != F.order:
            raise FactorizationError("conjugation changed a subgroup order")
        if rng.randrange(2):
            out.append((f"{name}^w{i}~swap", G, Fc, Lc))
        else:
            out.append((f"{name}^w{i}", G, Lc, Fc))
    return out


def pgl2_triple(q: int) -> tuple[PermGroup, PermGroup, PermGroup]:
    """(PGL2(q), C, S) as permutation groups on the projective line."""
    pkg = build_pgl2(q)
    return pkg.G, pkg.C, pkg.S
