"""Permutation groups with deterministic Schreier-Sims chains.

Composition convention, fixed package-wide: (p * q) maps x to q[p[x]],
i.e. apply the left factor first.  Points are 0-based internally; the
cycle-notation text format is 1-based.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    CapExceededError,
    ConsistencyError,
    CycleParseError,
    NotNilpotentError,
)
from .numutil import factorize

ORDER_CAP = 10**6
ENUM_CAP = 10**5


class Perm:
    """A permutation of [0, n) stored as an image table."""

    __slots__ = ("images", "_hash")

    def __init__(self, images):
        images = tuple(images)
        n = len(images)
        seen = [False] * n
        for x in images:
            if not 0 <= x < n or seen[x]:
                raise ValueError(f"not a permutation of [0, {n}): {images}")
            seen[x] = True
        self.images = images
        self._hash = hash(images)

    @classmethod
    def identity(cls, n: int) -> Perm:
        return cls(range(n))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __mul__(self, other: Perm) -> Perm:
        """Apply self first, then other."""
        oi = other.images
        return Perm(oi[i] for i in self.images)

    def inverse(self) -> Perm:
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Perm(inv)

    def __pow__(self, n: int) -> Perm:
        if n < 0:
            return self.inverse() ** (-n)
        out = Perm.identity(self.degree)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __call__(self, x: int) -> int:
        return self.images[x]

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles()))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each rotated to start at its least point."""
        seen = [False] * self.degree
        out = []
        for i in range(self.degree):
            if seen[i] or self.images[i] == i:
                seen[i] = True
                continue
            cyc = [i]
            j = self.images[i]
            seen[i] = True
            while j != i:
                seen[j] = True
                cyc.append(j)
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def __str__(self):
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + " ".join(str(x + 1) for x in c) + ")" for c in cycs)

    def __repr__(self):
        return f"Perm{self.images}"

    def __eq__(self, other):
        return isinstance(other, Perm) and self.images == other.images

    def __hash__(self):
        return self._hash

    def __lt__(self, other: Perm):
        return self.images < other.images


def parse_cycles(text: str, degree: int) -> Perm:
    """Parse 1-based cycle notation like "(1 2 3)(4 5)".

    Points inside parentheses are whitespace-separated; cycles are
    juxtaposed and need not be disjoint; they apply right-to-left (the
    rightmost cycle acts first).  Malformed input raises CycleParseError
    with the failing offset.
    """
    cycles: list[list[int]] = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch != "(":
            raise CycleParseError(f"expected '(' but found {ch!r}", i)
        i += 1
        points: list[int] = []
        while True:
            while i < n and text[i].isspace():
                i += 1
            if i >= n:
                raise CycleParseError("unterminated cycle", i)
            if text[i] == ")":
                i += 1
                break
            start = i
            while i < n and text[i].isdigit():
                i += 1
            if i == start:
                raise CycleParseError(f"expected a point but found {text[i]!r}", i)
            val = int(text[start:i])
            if not 1 <= val <= degree:
                raise CycleParseError(
                    f"point {val} out of range 1..{degree}", start
                )
            if val - 1 in points:
                raise CycleParseError(f"repeated point {val} in cycle", start)
            points.append(val - 1)
        if points:
            cycles.append(points)
    acc = Perm.identity(degree)
    for cyc in cycles:  # left-to-right accumulation applies the rightmost first
        images = list(range(degree))
        for a, b in zip(cyc, cyc[1:]):
            images[a] = b
        images[cyc[-1]] = cyc[0]
        acc = Perm(images) * acc
    return acc


class _Level:
    """One level of a stabilizer chain."""

    __slots__ = ("base", "gens", "orbit_order", "transversal", "processed")

    def __init__(self, base: int, degree: int):
        self.base = base
        self.gens: list[Perm] = []
        self.orbit_order: list[int] = [base]
        self.transversal: dict[int, Perm] = {base: Perm.identity(degree)}
        self.processed: set[tuple[int, Perm]] = set()


class PermGroup:
    """Permutation group with a base and strong generating set.

    Immutable after construction; all queries are read-only.  Deterministic:
    equal generator lists produce identical chains, element orders, and
    enumeration orders.
    """

    def __init__(self, generators, degree: int | None = None, order_cap: int = ORDER_CAP):
        gens = []
        for g in generators:
            if not isinstance(g, Perm):
                g = Perm(g)
            gens.append(g)
        if degree is None:
            if not gens:
                raise ValueError("degree is required for an empty generator list")
            degree = gens[0].degree
        for g in gens:
            if g.degree != degree:
                raise ValueError(
                    f"generator degree {g.degree} does not match {degree}"
                )
        self.degree = degree
        unique = []
        seen = set()
        for g in gens:
            if not g.is_identity() and g not in seen:
                seen.add(g)
                unique.append(g)
        self.generators = tuple(unique)
        self._order_cap = order_cap
        self._levels: list[_Level] = []
        self._elements: list[Perm] | None = None
        self._build()

    # -- Schreier-Sims construction -------------------------------------
    #
    # Classical incremental algorithm: distribute the generators over the
    # chain by the base prefix they fix, then verify levels bottom-up,
    # jumping back down whenever a Schreier residue survives sifting.  A
    # residue found while processing level i already lies in the level-i
    # group, so only levels i+1..j ever need their orbits rebuilt.

    def _level_gens(self, i: int) -> list[Perm]:
        out = []
        for lvl in self._levels[i:]:
            out.extend(lvl.gens)
        return out

    def _sift(self, p: Perm, start: int = 0) -> tuple[Perm, int]:
        """Strip p through the chain; returns (residue, stuck level)."""
        for i in range(start, len(self._levels)):
            lvl = self._levels[i]
            beta = p.images[lvl.base]
            if beta == lvl.base:
                continue
            u = lvl.transversal.get(beta)
            if u is None:
                return p, i
            p = p * u.inverse()
        return p, len(self._levels)

    def _store_gen(self, g: Perm) -> int:
        """Place g at the deepest level whose base prefix it fixes."""
        for i, lvl in enumerate(self._levels):
            if g.images[lvl.base] != lvl.base:
                lvl.gens.append(g)
                return i
        base = min(x for x in range(self.degree) if g.images[x] != x)
        self._levels.append(_Level(base, self.degree))
        self._levels[-1].gens.append(g)
        return len(self._levels) - 1

    def _build(self):
        for g in self.generators:
            self._store_gen(g)
        for i in range(len(self._levels)):
            self._recompute_orbit(i)
        i = len(self._levels) - 1
        while i >= 0:
            j = self._process_level(i)
            if j is None:
                i -= 1
            else:
                i = j

    def _process_level(self, i: int) -> int | None:
        """Sift level-i Schreier generators; returns the jump level on growth."""
        lvl = self._levels[i]
        while True:
            gens = self._level_gens(i)
            progressed = False
            for beta in list(lvl.orbit_order):
                u_beta = lvl.transversal[beta]
                for s in gens:
                    key = (beta, s)
                    if key in lvl.processed:
                        continue
                    lvl.processed.add(key)
                    progressed = True
                    gamma = s.images[beta]
                    schreier = u_beta * s * lvl.transversal[gamma].inverse()
                    if schreier.is_identity():
                        continue
                    residue, j = self._sift(schreier, i + 1)
                    if residue.is_identity():
                        continue
                    if j == len(self._levels):
                        base = min(
                            x for x in range(self.degree)
                            if residue.images[x] != x
                        )
                        self._levels.append(_Level(base, self.degree))
                    self._levels[j].gens.append(residue)
                    for k in range(i + 1, j + 1):
                        self._recompute_orbit(k)
                    return j
            if not progressed:
                return None

    def _recompute_orbit(self, i: int):
        lvl = self._levels[i]
        gens = self._level_gens(i)
        lvl.orbit_order = [lvl.base]
        lvl.transversal = {lvl.base: Perm.identity(self.degree)}
        queue = [lvl.base]
        while queue:
            a = queue.pop(0)
            ua = lvl.transversal[a]
            for g in gens:
                b = g.images[a]
                if b not in lvl.transversal:
                    lvl.transversal[b] = ua * g
                    lvl.orbit_order.append(b)
                    queue.append(b)
        order = 1
        for level in self._levels:
            order *= len(level.transversal)
        if order > self._order_cap:
            raise CapExceededError(
                f"group order exceeds cap {self._order_cap} during construction"
            )

    # -- queries ---------------------------------------------------------

    @property
    def order(self) -> int:
        n = 1
        for lvl in self._levels:
            n *= len(lvl.transversal)
        return n

    @property
    def base(self) -> list[int]:
        return [lvl.base for lvl in self._levels]

    @property
    def strong_generators(self) -> list[Perm]:
        return self._level_gens(0)

    def contains(self, p: Perm) -> bool:
        if p.degree != self.degree:
            raise ValueError(f"degree mismatch: {p.degree} vs {self.degree}")
        residue, i = self._sift(p)
        return i == len(self._levels) and residue.is_identity()

    def __contains__(self, p: Perm) -> bool:
        return self.contains(p)

    def elements(self, enum_cap: int = ENUM_CAP) -> list[Perm]:
        """All elements in transversal-product order (identity first)."""
        if self.order > enum_cap:
            raise CapExceededError(
                f"order {self.order} exceeds enumeration cap {enum_cap}"
            )
        if self._elements is None:
            out = [Perm.identity(self.degree)]
            for lvl in reversed(self._levels):
                us = [lvl.transversal[b] for b in lvl.orbit_order]
                out = [h * u for u in us for h in out]
            self._elements = out
        return self._elements

    def is_trivial(self) -> bool:
        return not self._levels

    def is_abelian(self) -> bool:
        gens = self.generators
        return all(
            a * b == b * a for i, a in enumerate(gens) for b in gens[i + 1 :]
        )

    def is_subgroup_of(self, other: PermGroup) -> bool:
        return all(other.contains(g) for g in self.generators)

    def __repr__(self):
        return f"PermGroup(degree={self.degree}, order={self.order})"


def group_from_generators(gens, degree: int | None = None,
                          order_cap: int = ORDER_CAP) -> PermGroup:
    """Build a PermGroup with a base and strong generating set."""
    return PermGroup(gens, degree=degree, order_cap=order_cap)


def contains(G: PermGroup, x: Perm) -> bool:
    """Membership through the stabilizer chain."""
    return G.contains(x)


def enumerate_elements(G: PermGroup, enum_cap: int = ENUM_CAP) -> list[Perm]:
    """All |G| elements in transversal-product order."""
    return G.elements(enum_cap)


@dataclass(frozen=True)
class SubgroupSeries:
    """Descending subgroup series tagged by its kind."""

    terms: tuple[PermGroup, ...]
    kind: str  # "derived" | "lower-central"

    def orders(self) -> tuple[int, ...]:
        return tuple(t.order for t in self.terms)


def commutator(a: Perm, b: Perm) -> Perm:
    """[a, b] = a^-1 * b^-1 * a * b."""
    return a.inverse() * b.inverse() * a * b


def conjugate(x: Perm, g: Perm) -> Perm:
    """x^g = g^-1 * x * g."""
    return g.inverse() * x * g


def normal_closure(G: PermGroup, seeds) -> PermGroup:
    """Smallest subgroup containing ``seeds`` and normalized by G."""
    gens = [s for s in seeds if not s.is_identity()]
    H = PermGroup(gens, degree=G.degree)
    queue = list(gens)
    while queue:
        h = queue.pop(0)
        for g in G.generators:
            c = conjugate(h, g)
            if c not in H:
                gens.append(c)
                queue.append(c)
                H = PermGroup(gens, degree=G.degree)
    return H


def derived_subgroup(G: PermGroup) -> PermGroup:
    """Commutator subgroup: normal closure of the generator commutators."""
    gens = G.generators
    comms = [commutator(a, b) for i, a in enumerate(gens) for b in gens[i + 1 :]]
    return normal_closure(G, comms)


def derived_series(G: PermGroup) -> SubgroupSeries:
    terms = [G]
    while True:
        nxt = derived_subgroup(terms[-1])
        if nxt.order == terms[-1].order:
            break
        terms.append(nxt)
        if nxt.order == 1:
            break
    return SubgroupSeries(tuple(terms), "derived")


def lower_central_series(N: PermGroup) -> SubgroupSeries:
    """gamma_1 = N, gamma_{i+1} = [N, gamma_i], down to the trivial group.

    Raises NotNilpotentError when the series stabilizes above 1; silent
    stabilization would mask misuse, since intended inputs (Frobenius
    kernels) are nilpotent.
    """
    terms = [N]
    current = N
    while current.order > 1:
        comms = [
            commutator(a, b) for a in N.generators for b in current.generators
        ]
        nxt = normal_closure(N, comms)
        if nxt.order == current.order:
            raise NotNilpotentError(
                f"lower central series stabilized at order {nxt.order}"
            )
        terms.append(nxt)
        current = nxt
    return SubgroupSeries(tuple(terms), "lower-central")


def is_normal(G: PermGroup, N: PermGroup) -> bool:
    """Whether N (a subgroup of G) is normalized by G's generators."""
    return all(
        conjugate(n, g) in N for n in N.generators for g in G.generators
    )


def point_action(x: int, g: Perm) -> int:
    """The natural action of g on points."""
    return g.images[x]


def conjugation_action(x: Perm, g: Perm) -> Perm:
    return conjugate(x, g)


def orbit(G: PermGroup, action, x) -> list:
    """Orbit of x under G via ``action(point, perm)``, in discovery order."""
    seen = {x}
    out = [x]
    queue = [x]
    while queue:
        y = queue.pop(0)
        for g in G.generators:
            z = action(y, g)
            if z not in seen:
                seen.add(z)
                out.append(z)
                queue.append(z)
    return out


def orbits(G: PermGroup, action, points) -> list[list]:
    """Orbit partition of ``points``, sorted by least member."""
    remaining = list(points)
    seen = set()
    out = []
    for x in remaining:
        if x in seen:
            continue
        orb = orbit(G, action, x)
        seen.update(orb)
        out.append(orb)
    out.sort(key=lambda o: min(o))
    return out


def stabilizer_by_filter(G: PermGroup, action, x, enum_cap: int = ENUM_CAP) -> PermGroup:
    """Stabilizer of x under an arbitrary action, by filtering all of G.

    Verifies the orbit-stabilizer identity before returning.
    """
    elems = G.elements(enum_cap)
    fixing = [g for g in elems if action(x, g) == x]
    H = PermGroup(
        [g for g in fixing if not g.is_identity()], degree=G.degree
    )
    orb = orbit(G, action, x)
    if H.order * len(orb) != G.order:
        raise ConsistencyError(
            f"orbit-stabilizer mismatch: {H.order} * {len(orb)} != {G.order}"
        )
    if H.order != len(fixing):
        raise ConsistencyError("filtered stabilizer set is not a subgroup")
    return H


def exponent(G: PermGroup, enum_cap: int = ENUM_CAP) -> int:
    """lcm of the element orders."""
    out = 1
    for g in G.elements(enum_cap):
        out = math.lcm(out, g.order())
    return out


def abelian_invariants_of_quotient(G: PermGroup, N: PermGroup) -> tuple[int, ...]:
    """Elementary divisors of the abelian quotient G/N, sorted ascending.

    The quotient is realized as its regular permutation action on the coset
    space; invariants are read off the element-order statistics of each
    primary component.  The product of the invariants is checked against
    |G|/|N| before returning.
    """
    if not N.is_subgroup_of(G):
        raise ValueError("N is not a subgroup of G")
    if not is_normal(G, N):
        raise ValueError("N is not normal in G")
    n_elems = N.elements()
    ident = Perm.identity(G.degree)

    def coset_key(g: Perm) -> tuple[int, ...]:
        return min((n * g).images for n in n_elems)

    index = {coset_key(ident): 0}
    reps = [ident]
    queue = [ident]
    while queue:
        g = queue.pop(0)
        for gen in G.generators:
            h = g * gen
            k = coset_key(h)
            if k not in index:
                index[k] = len(reps)
                reps.append(h)
                queue.append(h)
    num = len(index)
    if num * N.order != G.order:
        raise ConsistencyError("coset enumeration does not cover G")
    images = []
    for gen in G.generators:
        images.append(Perm(index[coset_key(r * gen)] for r in reps))
    Q = PermGroup(images, degree=num)
    if not Q.is_abelian():
        raise ValueError("quotient G/N is not abelian")
    if Q.order != num:
        raise ConsistencyError("coset action of an abelian quotient must be regular")

    orders = [e.order() for e in Q.elements()]
    invariants: list[int] = []
    for r in sorted(factorize(num)):
        # c_k = #{x : x^(r^k) = 1} = r^(sum_i min(e_i, k)) on the r-part, so
        # log_r(c_k / c_{k-1}) counts the exponents e_i >= k.
        heights: list[int] = []
        prev = 1
        k = 1
        while True:
            rk = r**k
            ck = sum(1 for o in orders if rk % o == 0)
            if ck == prev:
                break
            m = 0
            step = ck // prev
            while step > 1:
                step //= r
                m += 1
            if prev * r**m != ck:
                raise ConsistencyError("element-order counts are not r-power spaced")
            heights.append(m)
            prev = ck
            k += 1
        num_parts = heights[0] if heights else 0
        for i in range(num_parts):
            e_i = sum(1 for h in heights if h > i)
            invariants.append(r**e_i)
    product = 1
    for v in invariants:
        product *= v
    if product != num:
        raise ConsistencyError(
            f"abelian invariant product {product} != quotient order {num}"
        )
    return tuple(sorted(invariants))
