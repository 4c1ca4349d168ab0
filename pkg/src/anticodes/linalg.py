"""Exact linear algebra over a :class:`~anticodes.fields.Field`.

Vectors are tuples of element codes, matrices are tuples of row tuples.
Subspaces are carried by their unique row-reduced echelon basis, which
makes equality, hashing and set membership canonical.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from random import Random
from typing import Iterable, Iterator

from .fields import Field
from .guards import DEFAULT_GUARD, GuardConfig

Vector = tuple[int, ...]
Matrix = tuple[Vector, ...]


# ---------------------------------------------------------------------------
# vectors and matrices
# ---------------------------------------------------------------------------

def vec_add(field: Field, u: Vector, v: Vector) -> Vector:
    return tuple(field.add(a, b) for a, b in zip(u, v, strict=True))


def vec_scale(field: Field, c: int, v: Vector) -> Vector:
    return tuple(field.mul(c, a) for a in v)


def mat_mul(field: Field, a: Matrix, b: Matrix) -> Matrix:
    bt = transpose(b)
    return tuple(tuple(_dot(field, row, col) for col in bt) for row in a)


def vec_mat(field: Field, v: Vector, b: Matrix) -> Vector:
    return tuple(_dot(field, v, col) for col in transpose(b))


def _dot(field: Field, u: Vector, v: Vector) -> int:
    acc = 0
    for a, b in zip(u, v, strict=True):
        if a and b:
            acc = field.add(acc, field.mul(a, b))
    return acc


def transpose(m: Matrix) -> Matrix:
    return tuple(zip(*m)) if m else ()


def identity(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def zero_vector(n: int) -> Vector:
    return (0,) * n


# ---------------------------------------------------------------------------
# row reduction
# ---------------------------------------------------------------------------

def rref(field: Field, m: Iterable[Vector]) -> tuple[Matrix, tuple[int, ...]]:
    """Row-reduced echelon form and pivot columns.

    The output keeps the input's number of rows (zero rows sink to the
    bottom); rank equals the number of pivots.
    """
    rows = [list(r) for r in m]
    if not rows:
        return (), ()
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = field.inv(rows[r][c])
        if inv != 1:
            rows[r] = [field.mul(inv, x) for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [field.sub(x, field.mul(f, y))
                           for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return tuple(tuple(row) for row in rows), tuple(pivots)


def rank(field: Field, m: Iterable[Vector]) -> int:
    return len(rref(field, m)[1])


def _is_rref(basis: Matrix) -> bool:
    last = -1
    pivots = []
    for row in basis:
        p = next((j for j, x in enumerate(row) if x != 0), None)
        if p is None or p <= last or row[p] != 1:
            return False
        pivots.append(p)
        last = p
    for i, row in enumerate(basis):
        for p in pivots[:i] + pivots[i + 1:]:
            if row[p] != 0:
                return False
    return True


# ---------------------------------------------------------------------------
# subspaces
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Subspace:
    """A subspace of field^n, identified by its RREF basis (no zero rows)."""

    field: Field
    n: int
    basis: Matrix

    def __post_init__(self) -> None:
        if any(len(row) != self.n for row in self.basis):
            raise ValueError("basis rows must have length n")
        if len(self.basis) > self.n:
            raise ValueError("more basis rows than ambient dimension")
        if not _is_rref(self.basis):
            raise ValueError("basis is not in row-reduced echelon form")

    @classmethod
    def from_vectors(cls, field: Field, n: int, vectors: Iterable[Vector]) -> "Subspace":
        reduced, pivots = rref(field, vectors)
        return cls(field, n, reduced[:len(pivots)])

    @classmethod
    def zero(cls, field: Field, n: int) -> "Subspace":
        return cls(field, n, ())

    @classmethod
    def full(cls, field: Field, n: int) -> "Subspace":
        return cls(field, n, identity(n))

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(next(j for j, x in enumerate(row) if x) for row in self.basis)

    def contains(self, v: Vector) -> bool:
        return all(x == 0 for x in self.reduce(v))

    def reduce(self, v: Vector) -> Vector:
        """Residue of v after elimination against the basis."""
        if len(v) != self.n:
            raise ValueError("vector length does not match ambient dimension")
        field = self.field
        v = list(v)
        for row, p in zip(self.basis, self.pivots):
            c = v[p]
            if c != 0:
                for j in range(p, self.n):
                    if row[j]:
                        v[j] = field.sub(v[j], field.mul(c, row[j]))
        return tuple(v)

    def vectors(self, guard: GuardConfig | None = None) -> Iterator[Vector]:
        """All vectors of the subspace (guarded exhaustive span)."""
        yield from span_vectors(self.field, self.basis, self.n, guard=guard,
                                context="Subspace.vectors")

    def __le__(self, other: "Subspace") -> bool:
        self._match(other)
        return all(other.contains(row) for row in self.basis)

    def _match(self, other: "Subspace") -> None:
        if self.field != other.field or self.n != other.n:
            raise ValueError("subspaces live in different ambient spaces")


def rowspace(field: Field, m: Iterable[Vector], n: int | None = None) -> Subspace:
    m = tuple(tuple(r) for r in m)
    if n is None:
        if not m:
            raise ValueError("ambient dimension needed for an empty matrix")
        n = len(m[0])
    return Subspace.from_vectors(field, n, m)


def span_vectors(field: Field, basis: Matrix, n: int,
                 guard: GuardConfig | None = None,
                 context: str = "span_vectors") -> Iterator[Vector]:
    """Every vector in the span, the zero vector first.  Exhaustive."""
    guard = guard or DEFAULT_GUARD
    guard.check_codewords(field.order ** len(basis), context)
    vecs: list[Vector] = [zero_vector(n)]
    yield vecs[0]
    for b in basis:
        scaled = [vec_scale(field, s, b) for s in range(1, field.order)]
        new = [vec_add(field, v, sb) for sb in scaled for v in vecs]
        yield from new
        vecs.extend(new)


def kernel(field: Field, m: Matrix, ncols: int) -> Subspace:
    """The right kernel { x : m @ x^T = 0 } as a subspace of field^ncols."""
    reduced, pivots = rref(field, m)
    free = [j for j in range(ncols) if j not in pivots]
    basis = []
    for j in free:
        v = [0] * ncols
        v[j] = 1
        for i, p in enumerate(pivots):
            v[p] = field.neg(reduced[i][j])
        basis.append(tuple(v))
    return Subspace.from_vectors(field, ncols, basis)


def dual_subspace(u: Subspace) -> Subspace:
    """Orthogonal complement under the standard inner product."""
    return kernel(u.field, u.basis, u.n)


def subspace_sum(u: Subspace, v: Subspace) -> Subspace:
    u._match(v)
    return Subspace.from_vectors(u.field, u.n, u.basis + v.basis)


def intersect(u: Subspace, v: Subspace) -> Subspace:
    """Intersection via the Zassenhaus double-block reduction.

    Asserts the modular law dim(U∩V) + dim(U+V) = dim U + dim V.
    """
    u._match(v)
    n = u.n
    block = [row + row for row in u.basis] + [row + zero_vector(n) for row in v.basis]
    reduced, pivots = rref(u.field, block)
    sum_dim = sum(1 for p in pivots if p < n)
    inter_rows = [row[n:] for row in reduced[:len(pivots)]
                  if all(x == 0 for x in row[:n])]
    result = Subspace.from_vectors(u.field, n, inter_rows)
    assert result.dim + sum_dim == u.dim + v.dim, "modular law violated"
    return result


def intersection_dim(u: Subspace, v: Subspace) -> int:
    """dim(U ∩ V) without materializing the intersection."""
    u._match(v)
    return u.dim + v.dim - rank(u.field, u.basis + v.basis)


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------

def gaussian_binomial(n: int, d: int, q: int) -> int:
    """Number of d-dimensional subspaces of F_q^n."""
    if d < 0 or d > n:
        return 0
    num = den = 1
    for i in range(d):
        num *= q ** (n - i) - 1
        den *= q ** (d - i) - 1
    return num // den


def enumerate_subspaces(field: Field, n: int, d: int,
                        guard: GuardConfig | None = None) -> Iterator[Subspace]:
    """All d-dimensional subspaces of field^n, each exactly once.

    Order is deterministic: lexicographic on pivot-column sets, then on the
    free entries read row-major and scanned as ascending element codes.
    """
    if not 0 <= d <= n:
        raise ValueError(f"need 0 <= d <= n, got d={d}, n={n}")
    guard = guard or DEFAULT_GUARD
    guard.check_subspaces(gaussian_binomial(n, d, field.order),
                          f"enumerate_subspaces(n={n}, d={d}, q={field.order})")
    if d == 0:
        yield Subspace.zero(field, n)
        return
    order = field.order
    for pivots in itertools.combinations(range(n), d):
        pivot_set = set(pivots)
        free = [(i, j) for i in range(d) for j in range(pivots[i] + 1, n)
                if j not in pivot_set]
        template = [[0] * n for _ in range(d)]
        for i, p in enumerate(pivots):
            template[i][p] = 1
        for values in itertools.product(range(order), repeat=len(free)):
            for (i, j), val in zip(free, values):
                template[i][j] = val
            yield Subspace(field, n, tuple(tuple(row) for row in template))


def enumerate_all_subspaces(field: Field, n: int,
                            guard: GuardConfig | None = None) -> Iterator[Subspace]:
    """All subspaces of every dimension, ascending by dimension."""
    for d in range(n + 1):
        yield from enumerate_subspaces(field, n, d, guard=guard)


# ---------------------------------------------------------------------------
# transforms and randomness
# ---------------------------------------------------------------------------

def is_invertible(field: Field, a: Matrix) -> bool:
    return len(a) > 0 and len(a) == len(a[0]) and rank(field, a) == len(a)


def invert_matrix(field: Field, a: Matrix) -> Matrix:
    n = len(a)
    if n == 0 or any(len(r) != n for r in a):
        raise ValueError("matrix must be square and non-empty")
    aug = tuple(row + ident_row for row, ident_row in zip(a, identity(n)))
    reduced, pivots = rref(field, aug)
    if tuple(pivots) != tuple(range(n)):
        raise ValueError("matrix is singular")
    return tuple(row[n:] for row in reduced)


def right_mul_subspace(u: Subspace, b: Matrix) -> Subspace:
    """The subspace { x @ b : x in U } for invertible b."""
    if not is_invertible(u.field, b):
        raise ValueError("transform matrix is singular")
    return Subspace.from_vectors(u.field, u.n,
                                 [vec_mat(u.field, row, b) for row in u.basis])


def random_matrix(field: Field, rows: int, cols: int, rng: Random) -> Matrix:
    return tuple(tuple(rng.randrange(field.order) for _ in range(cols))
                 for _ in range(rows))


def random_subspace(field: Field, n: int, d: int, rng: Random) -> Subspace:
    if not 0 <= d <= n:
        raise ValueError("need 0 <= d <= n")
    while True:
        s = Subspace.from_vectors(field, n, random_matrix(field, d, n, rng))
        if s.dim == d:
            return s


def random_invertible(field: Field, n: int, rng: Random) -> Matrix:
    while True:
        a = random_matrix(field, n, n, rng)
        if is_invertible(field, a):
            return a
