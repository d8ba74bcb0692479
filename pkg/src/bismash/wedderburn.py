"""Brute-force Wedderburn decomposition over a prime splitting field.

Input is any finite-dimensional associative algebra given by structure
constants mod a prime l.  Over a splitting prime (l = 1 mod the group
exponent for the algebras built here) the simple-module dimensions match
characteristic zero, and they are recovered exactly: split the center with
a random element's minimal polynomial, interpolate the primitive central
idempotents, and read each block size off an exact rank computation.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import ConsistencyError, OracleError
from .numutil import is_prime

DEFAULT_DIM_CAP = 256
ASSOC_EXHAUSTIVE_CAP = 256
ASSOC_SAMPLES = 2000
DEFAULT_RETRIES = 32
PRIME_SEARCH_LIMIT = 10**7


@dataclass(frozen=True)
class DegreeMultiset:
    """Sorted multiset of simple-module dimensions."""

    degrees: tuple[int, ...]

    @classmethod
    def of(cls, values) -> DegreeMultiset:
        vals = tuple(sorted(int(v) for v in values))
        if any(v < 1 for v in vals):
            raise ValueError(f"degrees must be positive: {vals}")
        return cls(vals)

    def sum_of_squares(self) -> int:
        return sum(d * d for d in self.degrees)

    def __iter__(self):
        return iter(self.degrees)

    def __len__(self):
        return len(self.degrees)

    def __str__(self):
        return "{" + ", ".join(str(d) for d in self.degrees) + "}"


def select_prime(exponent: int, order: int | None = None,
                 limit: int = PRIME_SEARCH_LIMIT) -> int:
    """Smallest prime l = 1 (mod exponent).

    Every prime divisor of the group order divides the exponent, so l
    automatically avoids the order: GF(l) is then a splitting field of
    characteristic coprime to |G|.
    """
    if exponent < 1:
        raise ValueError(f"exponent must be positive, got {exponent}")
    ell = exponent + 1
    while ell <= limit:
        if is_prime(ell):
            if order is not None and order % ell == 0:
                raise ConsistencyError(
                    f"selected prime {ell} divides the group order {order}"
                )
            return ell
        ell += exponent
    raise OracleError(f"no prime = 1 mod {exponent} below {limit}")


class StructureConstantAlgebra:
    """Associative algebra over GF(prime) given by sparse structure constants.

    Monomial algebras (every product is 0 or a single basis element with
    coefficient 1) carry a dense index table and get the fast code paths;
    general sparse constants are supported for interchange.
    Associativity is checked exhaustively at construction up to dim 256 and
    sampled above; the unit is always verified as a two-sided identity.
    """

    def __init__(self, dim: int, prime: int, *, table=None, constants=None,
                 unit=None, check: bool = True):
        if dim < 1:
            raise ValueError("dim must be positive")
        if not is_prime(prime):
            raise ValueError(f"{prime} is not prime")
        self.dim = dim
        self.prime = prime
        if (table is None) == (constants is None):
            raise ValueError("exactly one of table/constants is required")
        if table is not None:
            self.table = np.ascontiguousarray(table, dtype=np.int32)
            if self.table.shape != (dim, dim):
                raise ValueError("table must be dim x dim")
            self._constants = None
        else:
            self.table = None
            self._constants = {
                (int(i), int(j)): tuple((int(k), int(c) % prime) for k, c in terms)
                for (i, j), terms in constants.items()
            }
        self.unit = np.asarray(unit, dtype=np.int64) % prime
        if self.unit.shape != (dim,):
            raise ValueError("unit vector has wrong length")
        if check:
            self._check_unit()
            self._check_associativity()

    # -- constructors ---------------------------------------------------

    @classmethod
    def from_monomial_table(cls, table, unit_indices, prime: int,
                            check: bool = True) -> StructureConstantAlgebra:
        table = np.ascontiguousarray(table, dtype=np.int32)
        dim = table.shape[0]
        unit = np.zeros(dim, dtype=np.int64)
        for i in unit_indices:
            unit[i] = 1
        return cls(dim, prime, table=table, unit=unit, check=check)

    @classmethod
    def from_entries(cls, dim: int, prime: int, entries, unit,
                     check: bool = True) -> StructureConstantAlgebra:
        """Build from [[i, j, k, coeff], ...]; collapses to a table if monomial."""
        constants: dict[tuple[int, int], list[tuple[int, int]]] = {}
        for i, j, k, c in entries:
            c = int(c) % prime
            if c:
                constants.setdefault((int(i), int(j)), []).append((int(k), c))
        monomial = all(
            len(terms) == 1 and terms[0][1] == 1 for terms in constants.values()
        )
        if monomial:
            table = np.full((dim, dim), -1, dtype=np.int32)
            for (i, j), terms in constants.items():
                table[i, j] = terms[0][0]
            return cls(dim, prime, table=table, unit=unit, check=check)
        return cls(dim, prime, constants=constants, unit=unit, check=check)

    # -- multiplication -------------------------------------------------

    def pair_product(self, i: int, j: int) -> tuple[tuple[int, int], ...]:
        """Sparse coefficients of b_i * b_j."""
        if self.table is not None:
            k = int(self.table[i, j])
            return ((k, 1),) if k >= 0 else ()
        return self._constants.get((i, j), ())

    def left_mult_matrix(self, v: np.ndarray) -> np.ndarray:
        """Matrix of w -> v * w in column convention."""
        p = self.prime
        out = np.zeros((self.dim, self.dim), dtype=np.int64)
        if self.table is not None:
            for i in np.nonzero(v)[0]:
                row = self.table[int(i)]
                cols = np.nonzero(row >= 0)[0]
                np.add.at(out, (row[cols], cols), int(v[i]))
        else:
            for i in np.nonzero(v)[0]:
                for j in range(self.dim):
                    for k, c in self.pair_product(int(i), j):
                        out[k, j] += int(v[i]) * c
        return out % p

    def right_mult_matrix(self, v: np.ndarray) -> np.ndarray:
        """Matrix of w -> w * v in column convention."""
        p = self.prime
        out = np.zeros((self.dim, self.dim), dtype=np.int64)
        if self.table is not None:
            for j in np.nonzero(v)[0]:
                col = self.table[:, int(j)]
                rows = np.nonzero(col >= 0)[0]
                np.add.at(out, (col[rows], rows), int(v[j]))
        else:
            for j in np.nonzero(v)[0]:
                for i in range(self.dim):
                    for k, c in self.pair_product(i, int(j)):
                        out[k, i] += int(v[j]) * c
        return out % p

    def multiply(self, u: np.ndarray, v: np.ndarray) -> np.ndarray:
        p = self.prime
        out = np.zeros(self.dim, dtype=np.int64)
        for i in np.nonzero(u)[0]:
            for j in np.nonzero(v)[0]:
                for k, c in self.pair_product(int(i), int(j)):
                    out[k] += int(u[i]) * int(v[j]) * c
        return out % p

    # -- validation -------------------------------------------------------

    def _check_unit(self):
        ident = np.eye(self.dim, dtype=np.int64)
        if not np.array_equal(self.left_mult_matrix(self.unit) % self.prime, ident):
            raise ConsistencyError("unit is not a left identity")
        if not np.array_equal(self.right_mult_matrix(self.unit) % self.prime, ident):
            raise ConsistencyError("unit is not a right identity")

    def _check_associativity(self):
        if self.dim <= ASSOC_EXHAUSTIVE_CAP:
            if self.table is not None:
                bad = _kernels.table_assoc_violation(self.table)
            else:
                bad = _kernels.sparse_assoc_violation(*self._csr(), self.dim, self.prime)
            if bad is not None:
                raise ConsistencyError(f"associativity fails on basis triple {bad}")
        else:
            rng = random.Random(0)
            for _ in range(ASSOC_SAMPLES):
                i, j, k = (rng.randrange(self.dim) for _ in range(3))
                if not self._triple_ok(i, j, k):
                    raise ConsistencyError(
                        f"associativity fails on basis triple {(i, j, k)}"
                    )

    def _triple_ok(self, i: int, j: int, k: int) -> bool:
        p = self.prime
        lhs = np.zeros(self.dim, dtype=np.int64)
        rhs = np.zeros(self.dim, dtype=np.int64)
        for m, cm in self.pair_product(i, j):
            for n, cn in self.pair_product(m, k):
                lhs[n] += cm * cn
        for m, cm in self.pair_product(j, k):
            for n, cn in self.pair_product(i, m):
                rhs[n] += cm * cn
        return bool(np.array_equal(lhs % p, rhs % p))

    def _csr(self):
        ptr = np.zeros(self.dim * self.dim + 1, dtype=np.int64)
        idx: list[int] = []
        coef: list[int] = []
        for i in range(self.dim):
            for j in range(self.dim):
                terms = self.pair_product(i, j)
                for k, c in terms:
                    idx.append(k)
                    coef.append(c)
                ptr[i * self.dim + j + 1] = len(idx)
        return ptr, np.asarray(idx, dtype=np.int64), np.asarray(coef, dtype=np.int64)

    # -- interchange ------------------------------------------------------

    def to_json_dict(self) -> dict:
        entries = []
        for i in range(self.dim):
            for j in range(self.dim):
                for k, c in self.pair_product(i, j):
                    entries.append([i, j, k, c])
        return {
            "dim": self.dim,
            "prime": self.prime,
            "entries": entries,
            "unit": [int(v) for v in self.unit],
        }

    @classmethod
    def from_json_dict(cls, data: dict, check: bool = True) -> StructureConstantAlgebra:
        return cls.from_entries(
            int(data["dim"]), int(data["prime"]), data["entries"], data["unit"],
            check=check,
        )


@dataclass(frozen=True)
class DecompositionResult:
    """Outcome of a Wedderburn decomposition."""

    degrees: DegreeMultiset
    center_dim: int
    prime: int
    idempotent_count: int


def nullspace_mod(mat: np.ndarray, p: int) -> np.ndarray:
    """Rows spanning the right nullspace of ``mat`` mod p (RREF-canonical)."""
    m = np.ascontiguousarray(mat, dtype=np.int64) % p
    rows, cols = m.shape
    work = m.copy()
    rank, pivots = _kernels.rref_mod(work, p)
    pivot_set = set(pivots)
    free = [c for c in range(cols) if c not in pivot_set]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for bi, fc in enumerate(free):
        basis[bi, fc] = 1
        for r, pc in enumerate(pivots):
            basis[bi, pc] = (-work[r, fc]) % p
    return basis


def rank_mod(mat: np.ndarray, p: int) -> int:
    work = np.ascontiguousarray(mat, dtype=np.int64) % p
    rank, _ = _kernels.rref_mod(work, p)
    return rank


def center_basis(A: StructureConstantAlgebra) -> np.ndarray:
    """Basis (rows) of the center, via exact commutant elimination mod l."""
    p = A.prime
    basis = np.eye(A.dim, dtype=np.int64)
    for j in range(A.dim):
        if len(basis) == 1:
            break  # the center is at least 1-dimensional, so this is it
        ej = np.zeros(A.dim, dtype=np.int64)
        ej[j] = 1
        d = (A.right_mult_matrix(ej) - A.left_mult_matrix(ej)) % p
        constrained = d @ basis.T % p
        coeffs = nullspace_mod(constrained, p)
        basis = coeffs @ basis % p
        if len(basis) == 0:
            raise ConsistencyError("center collapsed to zero; unit must be central")
    return basis % p


# -- polynomial helpers over GF(p), ascending coefficient lists ------------


def _poly_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a, b, p):
    a = [x % p for x in a]
    _poly_trim(a)
    db = len(b) - 1
    inv = pow(b[-1], p - 2, p)
    while len(a) - 1 >= db and a:
        c = a[-1] * inv % p
        shift = len(a) - 1 - db
        for i in range(db + 1):
            a[shift + i] = (a[shift + i] - c * b[i]) % p
        _poly_trim(a)
    return a


def _poly_mulmod(a, b, f, p):
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_mod(out, f, p)


def _poly_powmod(a, n, f, p):
    out = [1]
    base = _poly_mod(list(a), f, p)
    while n:
        if n & 1:
            out = _poly_mulmod(out, base, f, p)
        base = _poly_mulmod(base, base, f, p)
        n >>= 1
    return out


def _poly_gcd(a, b, p):
    a = _poly_trim([x % p for x in a])
    b = _poly_trim([x % p for x in b])
    while b:
        a = _poly_mod(a, b, p)
        a, b = b, a
    if a:
        inv = pow(a[-1], p - 2, p)
        a = [x * inv % p for x in a]
    return a


def _poly_deriv(a, p):
    return _poly_trim([i * c % p for i, c in enumerate(a)][1:])


def _roots_of_split_squarefree(f, p, rng) -> list[int]:
    """All roots of a squarefree product of distinct linear factors.

    Equal-degree splitting (Cantor-Zassenhaus with degree-1 targets); the
    degrees involved are tiny, so the randomized gcd split is plenty.
    """
    f = [x % p for x in f]
    deg = len(f) - 1
    if deg == 0:
        return []
    if deg == 1:
        inv = pow(f[1], p - 2, p)
        return [(-f[0] * inv) % p]
    if p == 2:
        return [r for r in (0, 1) if _poly_eval(f, r, p) == 0]
    while True:
        a = rng.randrange(p)
        h = _poly_powmod([a, 1], (p - 1) // 2, f, p)
        if not h:
            h = [0]
        h[0] = (h[0] - 1) % p
        g = _poly_gcd(f, h, p)
        if 0 < len(g) - 1 < deg:
            quo = _poly_quotient(f, g, p)
            return sorted(
                _roots_of_split_squarefree(g, p, rng)
                + _roots_of_split_squarefree(quo, p, rng)
            )


def _poly_quotient(a, b, p):
    a = [x % p for x in a]
    db = len(b) - 1
    inv = pow(b[-1], p - 2, p)
    quo = [0] * (len(a) - db)
    work = list(a)
    while len(work) - 1 >= db and work:
        c = work[-1] * inv % p
        shift = len(work) - 1 - db
        quo[shift] = c
        for i in range(db + 1):
            work[shift + i] = (work[shift + i] - c * b[i]) % p
        _poly_trim(work)
    return quo


def _poly_eval(f, x, p):
    out = 0
    for c in reversed(f):
        out = (out * x + c) % p
    return out


class _RowSpan:
    """Incremental row space mod p with expression tracking."""

    def __init__(self, width: int, p: int):
        self.p = p
        self.width = width
        self.rows: list[np.ndarray] = []
        self.combos: list[np.ndarray] = []
        self.pivots: list[int] = []
        self.count = 0

    def reduce(self, v: np.ndarray):
        p = self.p
        v = v.copy() % p
        combo = np.zeros(self.count + 1, dtype=np.int64)
        combo[-1] = 1
        for row, cmb, piv in zip(self.rows, self.combos, self.pivots):
            c = v[piv]
            if c:
                v = (v - c * row) % p
                combo[: len(cmb)] = (combo[: len(cmb)] - c * cmb) % p
        return v, combo

    def add(self, v: np.ndarray):
        """Insert v; returns None if independent, else the dependency combo."""
        p = self.p
        red, combo = self.reduce(v)
        nz = np.nonzero(red)[0]
        if nz.size == 0:
            return combo
        piv = int(nz[0])
        inv = pow(int(red[piv]), p - 2, p)
        self.rows.append(red * inv % p)
        self.combos.append(combo * inv % p)
        self.pivots.append(piv)
        self.count += 1
        return None


def _relative_minpoly(mz: np.ndarray, e: np.ndarray, p: int) -> list[int]:
    """Monic minimal polynomial of a central z inside the ideal with unit e.

    ``mz`` is the multiplication matrix of z; since e is a central
    idempotent, powers of z*e inside the ideal are just mz applied to e.
    """
    span = _RowSpan(len(e), p)
    power = e.copy()
    while True:
        combo = span.add(power)
        if combo is not None:
            # combo expresses: sum combo[i] * (z e)^i = 0 with combo[-1] = 1
            return [int(c) for c in combo]
        power = mz @ power % p


def _split_idempotent(e: np.ndarray, mz: np.ndarray, minpoly: list[int],
                      p: int, rng: random.Random) -> list[np.ndarray]:
    """Split e along the roots of the relative minimal polynomial."""
    m = len(minpoly) - 1
    xq = _poly_powmod([0, 1], p, minpoly, p)
    xq_minus_x = list(xq) + [0] * (2 - len(xq))
    xq_minus_x[1] = (xq_minus_x[1] - 1) % p
    g = _poly_gcd(minpoly, xq_minus_x, p)
    if len(g) != len(minpoly):
        raise OracleError(
            "minimal polynomial has roots outside GF(l); wrong prime for this algebra"
        )
    roots = _roots_of_split_squarefree(minpoly, p, rng)
    if len(roots) != m:
        raise OracleError("root extraction lost roots; non-split input")
    powers = np.zeros((m, len(e)), dtype=np.int64)
    powers[0] = e
    for k in range(1, m):
        powers[k] = mz @ powers[k - 1] % p
    vand = np.array([[pow(r, k, p) for k in range(m)] for r in roots], dtype=np.int64)
    vand_inv = _invert_mod(vand, p)
    return list(vand_inv.T @ powers % p)


def decompose(A: StructureConstantAlgebra, seed: int = 0,
              max_retries: int = DEFAULT_RETRIES) -> DecompositionResult:
    """Simple-module dimension multiset of a split semisimple algebra.

    Central idempotents are found by repeated random splitting: a seeded
    random central element is restricted to each unresolved component, its
    relative minimal polynomial is split into distinct roots, and the
    Lagrange idempotents refine the component; splitting ends when the
    component count reaches the center dimension.  The result is
    deterministic per seed, and every seed yields the same multiset (the
    primitive central idempotents are canonical).  Raises OracleError when
    the input is (or behaves as) non-split or non-semisimple: retry
    exhaustion, roots outside GF(l), or a block whose rank is not a
    perfect square.
    """
    p = A.prime
    rng = random.Random(seed)
    z_basis = center_basis(A)
    c = len(z_basis)

    components = [A.unit.copy() % p]
    stalls = 0
    while len(components) < c:
        if stalls >= max_retries:
            raise OracleError(
                f"no separating central element after {max_retries} tries; "
                "input is likely not split semisimple"
            )
        coeffs = np.array([rng.randrange(p) for _ in range(c)], dtype=np.int64)
        z = coeffs @ z_basis % p
        mz = A.left_mult_matrix(z)
        progressed = False
        refined: list[np.ndarray] = []
        for e in components:
            f = _relative_minpoly(mz, e, p)
            if len(f) - 1 <= 1:
                refined.append(e)
                continue
            fp = _poly_deriv(f, p)
            if len(_poly_gcd(f, fp, p)) - 1 != 0:
                refined.append(e)  # nilpotent part present; let retries decide
                continue
            refined.extend(_split_idempotent(e, mz, f, p, rng))
            progressed = True
        components = refined
        stalls = 0 if progressed else stalls + 1

    total = np.zeros(A.dim, dtype=np.int64)
    for e in components:
        total = (total + e) % p
    if not np.array_equal(total, A.unit % p):
        raise ConsistencyError("central idempotents do not sum to the unit")

    degrees = []
    for e in components:
        r_e = A.right_mult_matrix(e)
        if not np.array_equal(r_e @ e % p, e % p):
            raise ConsistencyError("interpolated element is not idempotent")
        r = rank_mod(r_e, p)
        d = math.isqrt(r)
        if d * d != r:
            raise OracleError(f"block dimension {r} is not a perfect square")
        degrees.append(d)

    result = DegreeMultiset.of(degrees)
    if result.sum_of_squares() != A.dim:
        raise ConsistencyError(
            f"sum of squared degrees {result.sum_of_squares()} != dim {A.dim}"
        )
    return DecompositionResult(result, c, p, c)


def _invert_mod(mat: np.ndarray, p: int) -> np.ndarray:
    n = mat.shape[0]
    aug = np.hstack([mat % p, np.eye(n, dtype=np.int64)])
    aug = np.ascontiguousarray(aug)
    rank, pivots = _kernels.rref_mod(aug, p)
    if rank != n or pivots != list(range(n)):
        raise OracleError("interpolation matrix is singular")
    return aug[:, n:]
