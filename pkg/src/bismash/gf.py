"""Exact arithmetic in GF(p^h) and primitive quadratics over GF(q).

Elements live in the polynomial basis over GF(p): a coefficient tuple
(c_0, ..., c_{h-1}) for c_0 + c_1 X + ... reduced modulo a fixed monic
irreducible modulus.  Everything is immutable and deterministic: equal
(p, h) inputs always produce bit-identical contexts.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CapExceededError
from .numutil import factorize, is_prime

DEFAULT_FIELD_CAP = 2**16


class FieldCtx:
    """Arithmetic context for GF(p^h) with a fixed canonical modulus."""

    def __init__(self, p: int, h: int, modulus: tuple[int, ...]):
        self.p = p
        self.h = h
        self.modulus = modulus  # ascending degree, length h+1, monic
        self.q = p**h
        self._zero = FieldElement(self, (0,) * h)
        self._one = FieldElement(self, (1,) + (0,) * (h - 1))

    def __repr__(self):
        return f"FieldCtx(GF({self.p}^{self.h}), modulus={list(self.modulus)})"

    def __eq__(self, other):
        return (
            isinstance(other, FieldCtx)
            and (self.p, self.h, self.modulus) == (other.p, other.h, other.modulus)
        )

    def __hash__(self):
        return hash((self.p, self.h, self.modulus))

    @property
    def zero(self) -> FieldElement:
        return self._zero

    @property
    def one(self) -> FieldElement:
        return self._one

    def element(self, coeffs) -> FieldElement:
        coeffs = tuple(c % self.p for c in coeffs)
        if len(coeffs) != self.h:
            raise ValueError(f"expected {self.h} coefficients, got {len(coeffs)}")
        return FieldElement(self, coeffs)

    def from_int(self, value: int) -> FieldElement:
        """Element with canonical index ``value`` (base-p digits as coeffs)."""
        if not 0 <= value < self.q:
            raise ValueError(f"index {value} out of range for GF({self.q})")
        coeffs = []
        for _ in range(self.h):
            value, c = divmod(value, self.p)
            coeffs.append(c)
        return FieldElement(self, tuple(coeffs))

    def elements(self) -> list[FieldElement]:
        """All q elements in canonical index order (zero first)."""
        return [self.from_int(v) for v in range(self.q)]


@dataclass(frozen=True)
class FieldElement:
    """Immutable element of a FieldCtx, in the polynomial basis."""

    ctx: FieldCtx
    coeffs: tuple[int, ...]

    def __int__(self):
        """Canonical index: sum of c_i * p^i."""
        return sum(c * self.ctx.p**i for i, c in enumerate(self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def _check(self, other: FieldElement):
        if self.ctx != other.ctx:
            raise ValueError("field context mismatch")

    def __add__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        p = self.ctx.p
        return FieldElement(
            self.ctx, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self) -> FieldElement:
        p = self.ctx.p
        return FieldElement(self.ctx, tuple(-a % p for a in self.coeffs))

    def __sub__(self, other: FieldElement) -> FieldElement:
        return self + (-other)

    def __mul__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        ctx = self.ctx
        prod = _poly_mul(self.coeffs, other.coeffs, ctx.p)
        return FieldElement(ctx, _poly_rem(prod, ctx.modulus, ctx.p, ctx.h))

    def inverse(self) -> FieldElement:
        if not self:
            raise ZeroDivisionError("inversion of zero field element")
        # a^(q-2) = a^-1 in GF(q)
        return self ** (self.ctx.q - 2)

    def __truediv__(self, other: FieldElement) -> FieldElement:
        return self * other.inverse()

    def __pow__(self, n: int) -> FieldElement:
        if n < 0:
            return self.inverse() ** (-n)
        out = self.ctx.one
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __repr__(self):
        return f"GF({self.ctx.q}):{int(self)}"


def _poly_mul(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return out


def _poly_rem(a, mod, p, h):
    """Remainder of a (ascending coeffs) modulo a monic ``mod`` of degree h."""
    a = list(a)
    for i in range(len(a) - 1, h - 1, -1):
        c = a[i]
        if c:
            a[i] = 0
            for j in range(h):
                a[i - h + j] = (a[i - h + j] - c * mod[j]) % p
    return tuple(a[:h]) if len(a) >= h else tuple(a) + (0,) * (h - len(a))


def _poly_divmod(a, b, p):
    """Division of coefficient lists (ascending) over GF(p); b nonzero."""
    a = [c % p for c in a]
    while a and a[-1] == 0:
        a.pop()
    db = len(b) - 1
    inv_lead = pow(b[-1], p - 2, p)
    quo = [0] * max(len(a) - db, 0)
    while len(a) - 1 >= db and a:
        c = a[-1] * inv_lead % p
        k = len(a) - 1 - db
        quo[k] = c
        for j in range(db + 1):
            a[k + j] = (a[k + j] - c * b[j]) % p
        while a and a[-1] == 0:
            a.pop()
    return quo, a


def _is_irreducible(poly, p):
    """Trial division by all monic polynomials of degree 1..deg/2."""
    deg = len(poly) - 1
    if deg == 1:
        return True
    for d in range(1, deg // 2 + 1):
        for v in range(p**d):
            cand = []
            val = v
            for _ in range(d):
                val, c = divmod(val, p)
                cand.append(c)
            cand.append(1)
            _, rem = _poly_divmod(poly, cand, p)
            if not rem:
                return False
    return True


def field_create(p: int, h: int, cap: int = DEFAULT_FIELD_CAP) -> FieldCtx:
    """GF(p^h) with the least monic irreducible modulus.

    Candidates X^h + c_{h-1} X^{h-1} + ... + c_0 are scanned in
    lexicographic order of (c_{h-1}, ..., c_0); the first irreducible one
    becomes the modulus, so equal (p, h) always yield the same context.
    """
    if not is_prime(p):
        raise ValueError(f"p = {p} is not prime")
    if h < 1:
        raise ValueError(f"extension degree h = {h} must be >= 1")
    if p**h > cap:
        raise CapExceededError(f"field size {p}^{h} exceeds cap {cap}")
    for v in range(p**h):
        coeffs = []
        val = v
        for _ in range(h):
            val, c = divmod(val, p)
            coeffs.append(c)
        poly = tuple(coeffs) + (1,)
        if _is_irreducible(poly, p):
            return FieldCtx(p, h, poly)
    raise RuntimeError(f"no irreducible polynomial of degree {h} over GF({p})")


def element_order(a: FieldElement) -> int:
    """Multiplicative order, found by repeated multiplication."""
    if not a:
        raise ZeroDivisionError("zero has no multiplicative order")
    one = a.ctx.one
    acc = a
    k = 1
    while acc != one:
        acc = acc * a
        k += 1
    return k


def multiplicative_generator(ctx: FieldCtx) -> FieldElement:
    """Least element (by canonical index) of order q - 1."""
    e = ctx.q - 1
    prime_divs = list(factorize(e)) if e > 1 else []
    for v in range(1, ctx.q):
        a = ctx.from_int(v)
        if all(a ** (e // r) != ctx.one for r in prime_divs):
            return a
    raise RuntimeError("no multiplicative generator found")  # unreachable


@dataclass(frozen=True)
class QuadraticPoly:
    """Monic quadratic X^2 + mu X + lam over GF(q)."""

    mu: FieldElement
    lam: FieldElement

    def companion(self) -> tuple[FieldElement, FieldElement, FieldElement, FieldElement]:
        """Row-major entries ((0, 1), (-lam, -mu)) of the companion matrix."""
        ctx = self.mu.ctx
        return (ctx.zero, ctx.one, -self.lam, -self.mu)

    def __repr__(self):
        return f"X^2 + {int(self.mu)}*X + {int(self.lam)} over GF({self.mu.ctx.q})"


def _mat2_mul(a, b, ctx):
    a00, a01, a10, a11 = a
    b00, b01, b10, b11 = b
    return (
        a00 * b00 + a01 * b10,
        a00 * b01 + a01 * b11,
        a10 * b00 + a11 * b10,
        a10 * b01 + a11 * b11,
    )


def _mat2_pow(m, n, ctx):
    out = (ctx.one, ctx.zero, ctx.zero, ctx.one)
    base = m
    while n:
        if n & 1:
            out = _mat2_mul(out, base, ctx)
        base = _mat2_mul(base, base, ctx)
        n >>= 1
    return out


def companion_order_is(poly: QuadraticPoly, target: int) -> bool:
    """Whether the companion matrix of ``poly`` has multiplicative order ``target``."""
    ctx = poly.mu.ctx
    if not poly.lam:  # singular companion matrix
        return False
    ident = (ctx.one, ctx.zero, ctx.zero, ctx.one)
    m = poly.companion()
    if _mat2_pow(m, target, ctx) != ident:
        return False
    return all(_mat2_pow(m, target // r, ctx) != ident for r in factorize(target))


def find_primitive_quadratic(ctx: FieldCtx) -> QuadraticPoly:
    """Least (mu, lam) whose companion matrix has order q^2 - 1 in GL2(q).

    The scan runs in lexicographic order of the canonical element indices,
    which makes the result deterministic per context.
    """
    target = ctx.q**2 - 1
    for mv in range(ctx.q):
        mu = ctx.from_int(mv)
        for lv in range(ctx.q):
            lam = ctx.from_int(lv)
            poly = QuadraticPoly(mu, lam)
            if companion_order_is(poly, target):
                return poly
    raise RuntimeError(f"no primitive quadratic over GF({ctx.q})")  # unreachable
