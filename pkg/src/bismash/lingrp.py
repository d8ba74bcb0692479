"""Matrix groups over finite fields realized as permutation groups.

PGL2(q) acts on the q+1 points of the projective line; GLn(2) acts on the
2^n - 1 nonzero vectors.  Both come packaged with a canonical Singer cycle.

Note on conventions: points transform as columns, v -> m @ v, so the map
matrix -> permutation reverses products under the package-wide
apply-left-first composition.  Generated subgroups, orbits and
factorizations are unaffected (g -> perm(g^-1) is an isomorphism onto the
same image), and all downstream statements are invariant under it.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import ConsistencyError
from .gf import (
    FieldCtx,
    FieldElement,
    QuadraticPoly,
    field_create,
    find_primitive_quadratic,
    multiplicative_generator,
)
from .numutil import prime_power
from .permgrp import Perm, PermGroup


@dataclass(frozen=True)
class Mat2:
    """2x2 matrix over a FieldCtx, row-major entries a b / c d."""

    a: FieldElement
    b: FieldElement
    c: FieldElement
    d: FieldElement

    @classmethod
    def identity(cls, ctx: FieldCtx) -> Mat2:
        return cls(ctx.one, ctx.zero, ctx.zero, ctx.one)

    def __mul__(self, o: Mat2) -> Mat2:
        return Mat2(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )

    def det(self) -> FieldElement:
        return self.a * self.d - self.b * self.c

    def inverse(self) -> Mat2:
        det = self.det()
        if not det:
            raise ZeroDivisionError("singular matrix")
        inv = det.inverse()
        return Mat2(self.d * inv, -self.b * inv, -self.c * inv, self.a * inv)

    def apply(self, v: tuple[FieldElement, FieldElement]):
        x, y = v
        return (self.a * x + self.b * y, self.c * x + self.d * y)


class ProjLine:
    """The projective line over GF(q): [1:t] for ascending t, then [0:1]."""

    def __init__(self, ctx: FieldCtx):
        self.ctx = ctx
        pts = [(ctx.one, t) for t in ctx.elements()]
        pts.append((ctx.zero, ctx.one))
        self.points = tuple(pts)
        self.index = {pt: i for i, pt in enumerate(self.points)}

    def __len__(self):
        return len(self.points)

    def normalize(self, v) -> tuple[FieldElement, FieldElement]:
        x, y = v
        if x:
            return (self.ctx.one, y / x)
        if not y:
            raise ValueError("zero vector has no projective image")
        return (self.ctx.zero, self.ctx.one)


def mat_to_projective_perm(m: Mat2, line: ProjLine) -> Perm:
    """Permutation of the projective points induced by v -> m v.

    Scalar matrices induce the identity; singular matrices are rejected.
    """
    if not m.det():
        raise ZeroDivisionError("singular matrix induces no permutation")
    return Perm(line.index[line.normalize(m.apply(pt))] for pt in line.points)


@dataclass
class Pgl2Package:
    """PGL2(q) with its Singer cycle and point stabilizer.

    G acts on the q+1 projective points; C = <image of the companion matrix
    of a primitive quadratic> has order q+1 and acts regularly; S stabilizes
    the point [1:0] (index 0) and has order q(q-1); together they factorize
    G exactly.  ``unipotents`` are the q images of [[1, t], [0, 1]].
    """

    q: int
    ctx: FieldCtx
    poly: QuadraticPoly
    line: ProjLine
    G: PermGroup
    C: PermGroup
    S: PermGroup
    xbar: Perm
    unipotents: tuple[Perm, ...]


def build_pgl2(q: int) -> Pgl2Package:
    """Construct the factorized group (PGL2(q), C, S) on the projective line."""
    pp = prime_power(q)
    if pp is None:
        raise ValueError(f"q = {q} is not a prime power")
    p, h = pp
    ctx = field_create(p, h)
    poly = find_primitive_quadratic(ctx)
    ca, cb, cc, cd = poly.companion()
    x = Mat2(ca, cb, cc, cd)
    line = ProjLine(ctx)
    xbar = mat_to_projective_perm(x, line)
    C = PermGroup([xbar], degree=len(line))

    one, zero = ctx.one, ctx.zero
    s_gens = [mat_to_projective_perm(Mat2(one, one, zero, one), line)]
    if q > 2:
        g0 = multiplicative_generator(ctx)
        s_gens.append(mat_to_projective_perm(Mat2(g0, zero, zero, one), line))
    S = PermGroup(s_gens, degree=len(line))
    G = PermGroup([xbar, *s_gens], degree=len(line))

    if G.order != q * (q - 1) * (q + 1):
        raise ConsistencyError(f"|PGL2({q})| = {G.order} != q^3 - q")
    if C.order != q + 1 or S.order != q * (q - 1):
        raise ConsistencyError("Singer or stabilizer subgroup has wrong order")
    if any(not g.is_identity() and g in S for g in C.elements()):
        raise ConsistencyError("C and S intersect nontrivially")
    for g in S.generators:
        if g.images[0] != 0:
            raise ConsistencyError("S does not stabilize the point [1:0]")

    unipotents = tuple(
        mat_to_projective_perm(Mat2(one, t, zero, one), line)
        for t in ctx.elements()
    )
    return Pgl2Package(q, ctx, poly, line, G, C, S, xbar, unipotents)


# -- GLn(2) ---------------------------------------------------------------


def _gf2_mat_mul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    """Product of GF(2) matrices stored as row bitmasks."""
    n = len(a)
    out = []
    for i in range(n):
        row = 0
        ai = a[i]
        for j in range(n):
            if ai >> j & 1:
                row ^= b[j]
        out.append(row)
    return tuple(out)


def _gf2_mat_perm(rows: tuple[int, ...]) -> Perm:
    """Permutation of the nonzero vectors v -> M v (v as a coordinate bitmask)."""
    n = len(rows)
    images = []
    for v in range(1, 2**n):
        w = 0
        for i in range(n):
            if (rows[i] & v).bit_count() & 1:
                w |= 1 << i
        images.append(w - 1)
    return Perm(images)


def _primitive_poly_gf2(n: int) -> tuple[int, ...]:
    """Low coefficients (c_0..c_{n-1}) of the least primitive degree-n poly."""
    ident = tuple(1 << i for i in range(n))
    target = 2**n - 1
    for v in range(2**n):
        coeffs = tuple(v >> i & 1 for i in range(n))
        if coeffs[0] == 0:
            continue  # singular companion matrix
        # companion matrix: column j < n-1 is e_{j+1}; last column is coeffs
        rows = []
        for i in range(n):
            row = coeffs[i] << (n - 1)
            if i >= 1:
                row |= 1 << (i - 1)
            rows.append(row)
        comp = tuple(rows)
        acc = comp
        order = 1
        while acc != ident and order <= target:
            acc = _gf2_mat_mul(acc, comp)
            order += 1
        if acc == ident and order == target:
            return coeffs
    raise RuntimeError(f"no primitive polynomial of degree {n} over GF(2)")


@dataclass
class Gln2Package:
    """GLn(2) on nonzero vectors with a designated Singer subgroup."""

    n: int
    G: PermGroup
    singer: PermGroup
    singer_generator: Perm


def build_gln2(n: int) -> Gln2Package:
    """GLn(2) as permutations of the 2^n - 1 nonzero vectors, n in {2, 3, 4}."""
    if n not in (2, 3, 4):
        raise ValueError(f"n = {n} out of supported range 2..4")
    gens = []
    for i in range(n):
        for j in range(n):
            if i != j:
                rows = tuple((1 << k) | (1 << j if k == i else 0) for k in range(n))
                gens.append(_gf2_mat_perm(rows))
    G = PermGroup(gens, degree=2**n - 1)
    expected = 1
    for i in range(n):
        expected *= 2**n - 2**i
    if G.order != expected:
        raise ConsistencyError(f"|GL{n}(2)| = {G.order} != {expected}")
    coeffs = _primitive_poly_gf2(n)
    rows = []
    for i in range(n):
        row = coeffs[i] << (n - 1)
        if i >= 1:
            row |= 1 << (i - 1)
        rows.append(row)
    singer_gen = _gf2_mat_perm(tuple(rows))
    singer = PermGroup([singer_gen], degree=2**n - 1)
    if singer.order != 2**n - 1:
        raise ConsistencyError(f"Singer subgroup has order {singer.order}")
    if not G.contains(singer_gen):
        raise ConsistencyError("Singer generator escaped GLn(2)")
    return Gln2Package(n, G, singer, singer_gen)


def singer_normalizer_order(n: int) -> int:
    """|N_G(S)| for the Singer cycle S < G = GLn(2), by brute-force filtering.

    g normalizes the cyclic S iff the conjugate of its generator lands back
    in S; the sweep over all of G is batched through the kernel backend.
    """
    pkg = build_gln2(n)
    degree = 2**n - 1
    elems = np.array([g.images for g in pkg.G.elements()], dtype=np.int32)
    target = np.array(pkg.singer_generator.images, dtype=np.int32)
    conj = _kernels.conjugate_rows(elems, target)
    radix = degree ** np.arange(degree, dtype=np.int64)
    keys = conj.astype(np.int64) @ radix
    member = np.sort(
        np.array(
            [np.array(s.images, dtype=np.int64) @ radix for s in pkg.singer.elements()]
        )
    )
    pos = np.searchsorted(member, keys)
    pos = np.clip(pos, 0, len(member) - 1)
    count = int(np.count_nonzero(member[pos] == keys))
    return count
