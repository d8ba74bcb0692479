"""Bismash products of exactly factorized groups.

Given subgroups L, F of G with trivial intersection and |L||F| = |G|, every
element decomposes uniquely as f*l; the induced mutual actions twist the
multiplication of the function algebra on L against the group algebra of F.
This module validates factorizations, computes the mutual actions, the
orbit/stabilizer dimension formula, the full structure-constant algebra,
and the Hopf structure maps.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass

import numpy as np

from . import permgrp, wedderburn
from .errors import (
    CapExceededError,
    ConsistencyError,
    FactorizationError,
    NotFrobeniusError,
)
from .permgrp import Perm, PermGroup, parse_cycles
from .wedderburn import DegreeMultiset, StructureConstantAlgebra

ALGEBRA_DIM_CAP = 2000
HOPF_DIM_CAP = 64
ASSOC_SAMPLES = 2000


@dataclass
class MutualActions:
    """Index tables of the two actions induced by l*f = (^[l]f) * (l^[f]).

    left[l, f] is the F-index of ^[l]f; right[l, f] is the L-index of l^[f].
    """

    left: np.ndarray
    right: np.ndarray


class FactorizedGroup:
    """A validated triple (G, L, F) with its decomposition table.

    Elements of G are indexed in deterministic enumeration order; the
    decomposition table maps each index to the unique (f, l) index pair
    with g = f * l.
    """

    def __init__(self, G: PermGroup, L: PermGroup, F: PermGroup):
        self.G, self.L, self.F = G, L, F
        self.g_elements = tuple(G.elements())
        self.l_elements = tuple(L.elements())
        self.f_elements = tuple(F.elements())
        self.g_index = {g: i for i, g in enumerate(self.g_elements)}
        self.l_index = {l: i for i, l in enumerate(self.l_elements)}
        self.f_index = {f: i for i, f in enumerate(self.f_elements)}
        decomposition: list[tuple[int, int] | None] = [None] * G.order
        for fi, f in enumerate(self.f_elements):
            for li, l in enumerate(self.l_elements):
                g = f * l
                gi = self.g_index.get(g)
                if gi is None:
                    raise FactorizationError(f"product {g} escapes G")
                if decomposition[gi] is not None:
                    raise FactorizationError(
                        f"product {g} has two F*L decompositions"
                    )
                decomposition[gi] = (fi, li)
        if any(d is None for d in decomposition):
            raise FactorizationError("F*L products do not cover G")
        self.decomposition = tuple(decomposition)
        self._actions: MutualActions | None = None
        self._prime: int | None = None
        self._l_mul: np.ndarray | None = None
        self._f_mul: np.ndarray | None = None

    def decompose(self, g: Perm) -> tuple[Perm, Perm]:
        """The unique (f, l) with g = f * l."""
        fi, li = self.decomposition[self.g_index[g]]
        return self.f_elements[fi], self.l_elements[li]

    def actions(self) -> MutualActions:
        if self._actions is None:
            self._actions = mutual_actions(self)
        return self._actions

    def splitting_prime(self) -> int:
        """Prime l = 1 mod exp(G); covers every stabilizer subgroup of F."""
        if self._prime is None:
            self._prime = wedderburn.select_prime(
                permgrp.exponent(self.G), self.G.order
            )
        return self._prime

    def l_mul_table(self) -> np.ndarray:
        if self._l_mul is None:
            self._l_mul = _mult_table(self.l_elements, self.l_index)
        return self._l_mul

    def f_mul_table(self) -> np.ndarray:
        if self._f_mul is None:
            self._f_mul = _mult_table(self.f_elements, self.f_index)
        return self._f_mul

    def l_inverse_table(self) -> np.ndarray:
        return np.array(
            [self.l_index[l.inverse()] for l in self.l_elements], dtype=np.int32
        )

    def f_inverse_table(self) -> np.ndarray:
        return np.array(
            [self.f_index[f.inverse()] for f in self.f_elements], dtype=np.int32
        )

    @property
    def dim(self) -> int:
        return self.L.order * self.F.order

    def __repr__(self):
        return (
            f"FactorizedGroup(|G|={self.G.order}, |L|={self.L.order}, "
            f"|F|={self.F.order})"
        )


def _mult_table(elements, index) -> np.ndarray:
    n = len(elements)
    out = np.empty((n, n), dtype=np.int32)
    for i, a in enumerate(elements):
        for j, b in enumerate(elements):
            out[i, j] = index[a * b]
    return out


def factorize(G: PermGroup, L: PermGroup, F: PermGroup,
              enum_cap: int = permgrp.ENUM_CAP) -> FactorizedGroup:
    """Validate (G, L, F) as an exact factorization and build its table."""
    if not (L.degree == F.degree == G.degree):
        raise FactorizationError("degree mismatch between G, L, F")
    if not L.is_subgroup_of(G) or not F.is_subgroup_of(G):
        raise FactorizationError("L and F must be subgroups of G")
    if G.order > enum_cap:
        raise CapExceededError(
            f"|G| = {G.order} exceeds enumeration cap {enum_cap}"
        )
    small, big = (L, F) if L.order <= F.order else (F, L)
    common = sum(1 for x in small.elements() if x in big)
    if common != 1:
        raise FactorizationError(f"|L ∩ F| = {common} != 1")
    if L.order * F.order != G.order:
        raise FactorizationError(
            f"|L| * |F| = {L.order * F.order} != |G| = {G.order}"
        )
    return FactorizedGroup(G, L, F)


def mutual_actions(fg: FactorizedGroup) -> MutualActions:
    """Decompose every product l*f through the table of fg."""
    nl, nf = fg.L.order, fg.F.order
    left = np.empty((nl, nf), dtype=np.int32)
    right = np.empty((nl, nf), dtype=np.int32)
    for li, l in enumerate(fg.l_elements):
        for fi, f in enumerate(fg.f_elements):
            fi2, li2 = fg.decomposition[fg.g_index[l * f]]
            left[li, fi] = fi2
            right[li, fi] = li2
    return MutualActions(left, right)


def verify_action_axioms(fg: FactorizedGroup):
    """Exhaustively check reconstruction and both action-axiom families."""
    acts = fg.actions()
    left, right = acts.left, acts.right
    nl, nf = left.shape
    for li, l in enumerate(fg.l_elements):
        for fi, f in enumerate(fg.f_elements):
            lhs = l * f
            rhs = fg.f_elements[left[li, fi]] * fg.l_elements[right[li, fi]]
            if lhs != rhs:
                raise ConsistencyError(f"l*f != (^[l]f)(l^[f]) at {(li, fi)}")
    id_l = fg.l_index[Perm.identity(fg.G.degree)]
    id_f = fg.f_index[Perm.identity(fg.G.degree)]
    if not np.array_equal(right[:, id_f], np.arange(nl)):
        raise ConsistencyError("right action: l^[1] != l")
    if not np.array_equal(left[id_l, :], np.arange(nf)):
        raise ConsistencyError("left action: ^[1]f != f")
    f_mul = fg.f_mul_table()
    for fi in range(nf):
        for fj in range(nf):
            if not np.array_equal(right[right[:, fi], fj], right[:, f_mul[fi, fj]]):
                raise ConsistencyError(
                    f"right action: (l^[f])^[f'] != l^[f f'] at {(fi, fj)}"
                )
    l_mul = fg.l_mul_table()
    for li in range(nl):
        for lj in range(nl):
            if not np.array_equal(left[l_mul[li, lj], :], left[li, left[lj, :]]):
                raise ConsistencyError(
                    f"left action: ^[l l']f != ^[l](^[l']f) at {(li, lj)}"
                )


# -- group algebras and the default degree oracle ---------------------------


def group_algebra(H: PermGroup, prime: int,
                  dim_cap: int = wedderburn.DEFAULT_DIM_CAP,
                  check: bool = True) -> StructureConstantAlgebra:
    """The group algebra of H over GF(prime) as a monomial algebra."""
    if H.order > dim_cap:
        raise CapExceededError(f"|H| = {H.order} exceeds algebra dim cap {dim_cap}")
    elems = H.elements()
    index = {e: i for i, e in enumerate(elems)}
    if not elems[0].is_identity():
        raise ConsistencyError("element enumeration must start at the identity")
    table = np.empty((H.order, H.order), dtype=np.int32)
    for i, a in enumerate(elems):
        for j, b in enumerate(elems):
            table[i, j] = index[a * b]
    return StructureConstantAlgebra.from_monomial_table(table, [0], prime, check=check)


def group_degrees(H: PermGroup, prime: int, seed: int = 0,
                  dim_cap: int = wedderburn.DEFAULT_DIM_CAP) -> tuple[int, ...]:
    """Character degrees of H via the Wedderburn oracle.

    Abelian groups short-circuit to all ones; everything else goes through
    the group algebra over GF(prime).
    """
    if H.is_abelian():
        return (1,) * H.order
    alg = group_algebra(H, prime, dim_cap)
    return wedderburn.decompose(alg, seed=seed).degrees.degrees


def _default_oracle(fg: FactorizedGroup):
    def oracle(H: PermGroup) -> tuple[int, ...]:
        if H.is_abelian():
            return (1,) * H.order
        return group_degrees(H, fg.splitting_prime())

    return oracle


# -- the dimension formula ---------------------------------------------------


def right_orbits(fg: FactorizedGroup) -> list[list[int]]:
    """Orbits of F on L-indices under the right action, sorted by least index."""
    right = fg.actions().right
    nl, nf = right.shape
    seen = [False] * nl
    out = []
    for start in range(nl):
        if seen[start]:
            continue
        orb = [start]
        seen[start] = True
        queue = [start]
        while queue:
            x = queue.pop(0)
            for fi in range(nf):
                y = int(right[x, fi])
                if not seen[y]:
                    seen[y] = True
                    orb.append(y)
                    queue.append(y)
        out.append(orb)
    out.sort(key=min)
    return out


def orbit_stabilizer(fg: FactorizedGroup, l_idx: int) -> PermGroup:
    """Stab_F(l) under the right action, by filtering F's elements."""
    right = fg.actions().right
    fixing = [
        fg.f_elements[fi]
        for fi in range(fg.F.order)
        if right[l_idx, fi] == l_idx
    ]
    stab = PermGroup(
        [f for f in fixing if not f.is_identity()], degree=fg.G.degree
    )
    if stab.order != len(fixing):
        raise ConsistencyError("stabilizer filter did not produce a subgroup")
    return stab


def kmm_dimensions(fg: FactorizedGroup, degree_oracle=None) -> DegreeMultiset:
    """Simple-module dimensions of the bismash product by the orbit formula.

    For the least representative l of each F-orbit in L, every character
    degree d of Stab_F(l) contributes d * [F : Stab_F(l)].  The sum of the
    squares is checked against |G| before returning.
    """
    if degree_oracle is None:
        degree_oracle = _default_oracle(fg)
    dims: list[int] = []
    for orb in right_orbits(fg):
        rep = min(orb)
        stab = orbit_stabilizer(fg, rep)
        if stab.order * len(orb) != fg.F.order:
            raise ConsistencyError(
                f"orbit-stabilizer mismatch at representative {rep}"
            )
        index = len(orb)
        for d in degree_oracle(stab):
            dims.append(d * index)
    result = DegreeMultiset.of(dims)
    if result.sum_of_squares() != fg.G.order:
        raise ConsistencyError(
            f"sum of squared dimensions {result.sum_of_squares()} != |G| = "
            f"{fg.G.order}"
        )
    return result


# -- the structure-constant algebra ------------------------------------------


@dataclass
class BismashAlgebra:
    """The bismash product as a monomial algebra on basis pairs (l, f).

    Basis index is l * |F| + f; products follow
    (l # f)(l' # f') = [l^[f] == l'] (l # f f'), so the table entry is a
    single index or -1.
    """

    fg: FactorizedGroup
    dim: int
    table: np.ndarray
    unit_indices: tuple[int, ...]

    def to_structure_algebra(self, prime: int, check: bool = False) -> StructureConstantAlgebra:
        return StructureConstantAlgebra.from_monomial_table(
            self.table, self.unit_indices, prime, check=check
        )

    def basis_label(self, b: int) -> tuple[int, int]:
        nf = self.fg.F.order
        return divmod(b, nf)


def build_algebra(fg: FactorizedGroup, dim_cap: int = ALGEBRA_DIM_CAP) -> BismashAlgebra:
    """Sparse structure constants of the bismash product, with validation."""
    nl, nf = fg.L.order, fg.F.order
    dim = nl * nf
    if dim > dim_cap:
        raise CapExceededError(f"dim {dim} exceeds structure-constant cap {dim_cap}")
    right = fg.actions().right
    f_mul = fg.f_mul_table()
    eq = right[:, :, None] == np.arange(nl, dtype=np.int32)[None, None, :]
    base = (
        (np.arange(nl, dtype=np.int32) * nf)[:, None, None, None]
        + f_mul[None, :, None, :]
    )
    table = np.where(eq[:, :, :, None], base, np.int32(-1)).reshape(dim, dim)
    table = np.ascontiguousarray(table, dtype=np.int32)
    id_f = fg.f_index[Perm.identity(fg.G.degree)]
    unit_indices = tuple(l * nf + id_f for l in range(nl))
    alg = BismashAlgebra(fg, dim, table, unit_indices)
    _validate_bismash_table(alg)
    return alg


def _validate_bismash_table(alg: BismashAlgebra):
    table, dim = alg.table, alg.dim
    from . import _kernels

    if dim <= wedderburn.ASSOC_EXHAUSTIVE_CAP:
        bad = _kernels.table_assoc_violation(table)
        if bad is not None:
            raise ConsistencyError(f"bismash table not associative at {bad}")
    else:
        import random

        rng = random.Random(0)
        for _ in range(ASSOC_SAMPLES):
            i, j, k = (rng.randrange(dim) for _ in range(3))
            m = table[i, j]
            lhs = table[m, k] if m >= 0 else -1
            n = table[j, k]
            rhs = table[i, n] if n >= 0 else -1
            if lhs != rhs:
                raise ConsistencyError(
                    f"bismash table not associative at {(i, j, k)}"
                )
    units = np.asarray(alg.unit_indices)
    left = table[units, :]
    hits = left >= 0
    if not np.array_equal(hits.sum(axis=0), np.ones(dim, dtype=np.int64)):
        raise ConsistencyError("unit is not a left identity")
    if not np.array_equal(left.max(axis=0), np.arange(dim)):
        raise ConsistencyError("unit is not a left identity")
    rightu = table[:, units]
    if not np.array_equal((rightu >= 0).sum(axis=1), np.ones(dim, dtype=np.int64)):
        raise ConsistencyError("unit is not a right identity")
    if not np.array_equal(rightu.max(axis=1), np.arange(dim)):
        raise ConsistencyError("unit is not a right identity")


# -- Hopf structure maps ------------------------------------------------------


@dataclass
class HopfMaps:
    """Comultiplication, counit and antipode on the pair basis.

    comultiplication[b] lists the |L| tensor summands of Delta(b) as basis
    index pairs (all coefficients are 1); counit[b] is delta_{l,1}; the
    antipode permutes (or collapses) basis elements.
    """

    fg: FactorizedGroup
    comultiplication: tuple[tuple[tuple[int, int], ...], ...]
    counit: tuple[int, ...]
    antipode: tuple[int, ...]


def build_hopf_maps(fg: FactorizedGroup, hopf_cap: int = HOPF_DIM_CAP) -> HopfMaps:
    """Exact Hopf structure maps: Delta, epsilon, S on every basis element."""
    nl, nf = fg.L.order, fg.F.order
    dim = nl * nf
    if dim > hopf_cap:
        raise CapExceededError(f"dim {dim} exceeds Hopf cap {hopf_cap}")
    acts = fg.actions()
    left, right = acts.left, acts.right
    l_mul = fg.l_mul_table()
    l_inv = fg.l_inverse_table()
    f_inv = fg.f_inverse_table()
    ident = Perm.identity(fg.G.degree)
    id_l = fg.l_index[ident]

    comul = []
    counit = []
    antipode = []
    for li in range(nl):
        for fi in range(nf):
            terms = tuple(
                (
                    int(l_mul[li, l_inv[lh]]) * nf + int(left[lh, fi]),
                    lh * nf + fi,
                )
                for lh in range(nl)
            )
            comul.append(terms)
            counit.append(1 if li == id_l else 0)
            antipode.append(
                int(l_inv[right[li, fi]]) * nf + int(f_inv[left[li, fi]])
            )
    return HopfMaps(fg, tuple(comul), tuple(counit), tuple(antipode))


def verify_hopf_axioms(fg: FactorizedGroup, prime: int | None = None,
                       hopf_cap: int = HOPF_DIM_CAP):
    """Exhaustive Hopf-axiom suite over GF(prime).

    Checks that Delta is an algebra map on all basis pairs, both counit
    identities, and the antipode convolution identity; raises
    ConsistencyError on the first failure.
    """
    if prime is None:
        prime = fg.splitting_prime()
    alg = build_algebra(fg)
    maps = build_hopf_maps(fg, hopf_cap)
    table = alg.table
    dim = alg.dim
    comul = maps.comultiplication

    def tensor_of(b: int) -> Counter:
        return Counter(comul[b])

    for a in range(dim):
        for b in range(dim):
            product: Counter = Counter()
            for (x1, x2) in comul[a]:
                for (y1, y2) in comul[b]:
                    z1 = table[x1, y1]
                    z2 = table[x2, y2]
                    if z1 >= 0 and z2 >= 0:
                        product[(int(z1), int(z2))] += 1
            ab = table[a, b]
            expected = tensor_of(int(ab)) if ab >= 0 else Counter()
            if {k: v % prime for k, v in product.items() if v % prime} != {
                k: v % prime for k, v in expected.items() if v % prime
            }:
                raise ConsistencyError(
                    f"Delta is not multiplicative on basis pair {(a, b)}"
                )

    counit = maps.counit
    for b in range(dim):
        left_sum = Counter()
        right_sum = Counter()
        for (x, y) in comul[b]:
            if counit[x]:
                left_sum[y] += 1
            if counit[y]:
                right_sum[x] += 1
        if dict(left_sum) != {b: 1} or dict(right_sum) != {b: 1}:
            raise ConsistencyError(f"counit axiom fails on basis element {b}")

    unit_vec = np.zeros(dim, dtype=np.int64)
    for u in alg.unit_indices:
        unit_vec[u] = 1
    S = maps.antipode
    for b in range(dim):
        conv_l = np.zeros(dim, dtype=np.int64)
        conv_r = np.zeros(dim, dtype=np.int64)
        for (x, y) in comul[b]:
            z = table[S[x], y]
            if z >= 0:
                conv_l[z] += 1
            w = table[x, S[y]]
            if w >= 0:
                conv_r[w] += 1
        target = (counit[b] * unit_vec) % prime
        if not np.array_equal(conv_l % prime, target) or not np.array_equal(
            conv_r % prime, target
        ):
            raise ConsistencyError(
                f"antipode convolution identity fails on basis element {b}"
            )


@dataclass(frozen=True)
class CocommutativityResult:
    """Computed cocommutativity plus the structural criterion it must match."""

    cocommutative: bool
    l_abelian_normal: bool


def cocommutativity_check(fg: FactorizedGroup,
                          hopf_cap: int = HOPF_DIM_CAP) -> CocommutativityResult:
    """Whether swapping tensor legs fixes Delta on every basis element.

    Cross-checked against the predicate "L is abelian and normal in G";
    a disagreement would falsify the structural criterion and raises.
    """
    maps = build_hopf_maps(fg, hopf_cap)
    cocomm = all(
        Counter(terms) == Counter((y, x) for (x, y) in terms)
        for terms in maps.comultiplication
    )
    criterion = fg.L.is_abelian() and permgrp.is_normal(fg.G, fg.L)
    if cocomm != criterion:
        raise ConsistencyError(
            f"cocommutativity {cocomm} contradicts the abelian-normal "
            f"criterion {criterion}"
        )
    return CocommutativityResult(cocomm, criterion)


# -- Frobenius semidirect products -------------------------------------------


@dataclass
class FrobeniusReport:
    """Outcome of the Frobenius-kernel dimension check.

    kmm must equal predicted = degrees(H) together with (|N|-1)/|H| copies
    of |H|; nstar_invariants are the elementary divisors of the graded
    abelianization of N, whose product recovers |N|.
    """

    fg: FactorizedGroup
    kmm: DegreeMultiset
    predicted: DegreeMultiset
    h_degrees: tuple[int, ...]
    regular_orbit_count: int
    series_orders: tuple[int, ...]
    nstar_invariants: tuple[int, ...]
    nstar_order: int


def frobenius_bismash_report(G: PermGroup, N: PermGroup, H: PermGroup,
                             degree_oracle=None) -> FrobeniusReport:
    """Verify the Frobenius-family structure of k^N # kH.

    Requires G = N x| H with H acting fixed-point-freely (checked through
    the right mutual action, which is conjugation here).  Raises
    NotFrobeniusError for a nontrivial stabilizer, NotNilpotentError for a
    non-nilpotent kernel, and ConsistencyError if the dimension multiset
    disagrees with the prediction.
    """
    fg = factorize(G, N, H)
    if not permgrp.is_normal(G, N):
        raise NotFrobeniusError("N is not normal in G")
    right = fg.actions().right
    ident = Perm.identity(G.degree)
    id_n = fg.l_index[ident]
    stab_sizes = (right == np.arange(N.order, dtype=np.int32)[:, None]).sum(axis=1)
    for x in range(N.order):
        if x == id_n:
            continue
        if stab_sizes[x] != 1:
            raise NotFrobeniusError(
                f"Stab_H of a nontrivial kernel element has order {stab_sizes[x]}"
            )
    if degree_oracle is None:
        degree_oracle = _default_oracle(fg)
    kmm = kmm_dimensions(fg, degree_oracle)
    h_degs = tuple(degree_oracle(H))
    r, rem = divmod(N.order - 1, H.order)
    if rem:
        raise ConsistencyError("fixed-point-free action left a partial orbit")
    predicted = DegreeMultiset.of(list(h_degs) + [H.order] * r)

    series = permgrp.lower_central_series(N)
    invariants: list[int] = []
    for top, bottom in zip(series.terms, series.terms[1:]):
        invariants.extend(permgrp.abelian_invariants_of_quotient(top, bottom))
    nstar_order = 1
    for v in invariants:
        nstar_order *= v
    if nstar_order != N.order:
        raise ConsistencyError(f"|N*| = {nstar_order} != |N| = {N.order}")
    if kmm != predicted:
        raise ConsistencyError(
            f"dimension multiset {kmm} != predicted {predicted}"
        )
    return FrobeniusReport(
        fg=fg,
        kmm=kmm,
        predicted=predicted,
        h_degrees=h_degs,
        regular_orbit_count=r,
        series_orders=series.orders(),
        nstar_invariants=tuple(sorted(invariants)),
        nstar_order=nstar_order,
    )


# -- spec files ---------------------------------------------------------------


def load_factorized_spec(data) -> tuple[PermGroup, PermGroup, PermGroup]:
    """Parse a factorized-group spec: degree plus cycle strings for G, L, F."""
    if isinstance(data, (str, bytes)):
        data = json.loads(data)
    degree = int(data["degree"])
    if degree < 1:
        raise ValueError("degree must be positive")
    groups = []
    for key in ("G", "L", "F"):
        gens = [parse_cycles(s, degree) for s in data[key]]
        groups.append(PermGroup(gens, degree=degree))
    return tuple(groups)
