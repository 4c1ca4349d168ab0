"""Delsarte rank-metric codes: F_q-linear spaces of k x m matrices.

Codes are stored as subspaces of F_q^(km) under row-major flattening.
Optimal anticodes (spaces attaining dim = m * maxrk) are, up to invertible
row/column transformations, the standard spaces "last k-R rows zero" and,
when k = m, their transposes.  Since right multiplication preserves column
spaces, the orbit of the standard anticode under those transformations is
exactly the family { N : colsp(N) <= U } over R-dimensional U <= F_q^k
(resp. row spaces <= W for the transposed family).  That observation turns
anticode enumeration into enumeration of support subspaces, which is what
everything in this module rides on; the brute-force oracle validates it
against definition-level filtering.

The generalized weight of order r is the smallest dim/m over optimal
anticodes meeting the code in dimension >= r.  The module also implements
the duality theory: the weight profile of a code determines the profile of
its trace-product dual through complementary arithmetic-progression slices.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from random import Random
from typing import Iterable, Iterator

from . import linalg as la
from . import rankmetric as rk
from .fields import Field
from .guards import GuardConfig
from .linalg import Matrix, Subspace, Vector


def flatten(matrix: Matrix) -> Vector:
    return tuple(x for row in matrix for x in row)


def unflatten(v: Vector, k: int, m: int) -> Matrix:
    if len(v) != k * m:
        raise ValueError("flattened vector length does not equal k*m")
    return tuple(v[i * m:(i + 1) * m] for i in range(k))


@dataclass(frozen=True)
class DelsarteCode:
    """An F_q-linear space of k x m matrices, flattened row-major."""

    field: Field
    k: int
    m: int
    space: Subspace

    def __post_init__(self) -> None:
        if not 1 <= self.k <= self.m:
            raise ValueError(
                f"k <= m required for matrix codes, got k={self.k}, m={self.m}")
        if self.space.field != self.field or self.space.n != self.k * self.m:
            raise ValueError("subspace does not match the declared matrix shape")

    @classmethod
    def from_matrices(cls, field: Field, k: int, m: int,
                      generators: Iterable[Matrix]) -> "DelsarteCode":
        vectors = [flatten(tuple(tuple(row) for row in g)) for g in generators]
        return cls(field, k, m, Subspace.from_vectors(field, k * m, vectors))

    @property
    def dim(self) -> int:
        return self.space.dim

    def basis_matrices(self) -> tuple[Matrix, ...]:
        return tuple(unflatten(row, self.k, self.m) for row in self.space.basis)


def rank_of_matrix(field: Field, matrix: Matrix) -> int:
    return la.rank(field, matrix)


def minrk(code: DelsarteCode, guard: GuardConfig | None = None) -> int:
    if code.dim == 0:
        raise ValueError("minimum rank of the zero code is undefined")
    it = la.span_vectors(code.field, code.space.basis, code.k * code.m,
                         guard=guard, context="minrk")
    next(it)
    return min(la.rank(code.field, unflatten(v, code.k, code.m)) for v in it)


def maxrk(code: DelsarteCode, guard: GuardConfig | None = None) -> int:
    best = 0
    for v in la.span_vectors(code.field, code.space.basis, code.k * code.m,
                             guard=guard, context="maxrk"):
        r = la.rank(code.field, unflatten(v, code.k, code.m))
        if r > best:
            best = r
    return best


def is_optimal_delsarte_code(code: DelsarteCode,
                             guard: GuardConfig | None = None) -> bool:
    """True iff dim attains the Singleton-like bound m*(k - minrk + 1)."""
    if code.dim == 0:
        raise ValueError("the zero code is not eligible for the optimal-code bound")
    return code.dim == code.m * (code.k - minrk(code, guard=guard) + 1)


def is_optimal_delsarte_anticode(code: DelsarteCode,
                                 guard: GuardConfig | None = None) -> bool:
    """True iff dim attains the anticode bound m * maxrk."""
    return code.dim == code.m * maxrk(code, guard=guard)


def standard_anticode(field: Field, k: int, m: int, r: int) -> DelsarteCode:
    """The k x m matrices whose last k-r rows vanish (dim m*r, maxrk r)."""
    if not 0 <= r <= k:
        raise ValueError(f"need 0 <= r <= k, got r={r}")
    n = k * m
    basis = tuple(tuple(1 if idx == i * m + j else 0 for idx in range(n))
                  for i in range(r) for j in range(m))
    return DelsarteCode(field, k, m, Subspace(field, n, basis))


# ---------------------------------------------------------------------------
# optimal anticodes via support subspaces
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AnticodeDescriptor:
    """Compact description of an optimal anticode of maximum rank R.

    kind='column': the matrices whose column space lies in `support` <= F_q^k.
    kind='row' (square shape only): row space inside `support` <= F_q^m.
    """

    kind: str
    k: int
    m: int
    support: Subspace

    def __post_init__(self) -> None:
        if self.kind not in ("column", "row"):
            raise ValueError("kind must be 'column' or 'row'")
        if self.kind == "row" and self.k != self.m:
            raise ValueError("row-support anticodes exist only for square shapes")
        expected = self.k if self.kind == "column" else self.m
        if self.support.n != expected:
            raise ValueError("support subspace has the wrong ambient dimension")

    @property
    def max_rank(self) -> int:
        return self.support.dim


def anticode_space(desc: AnticodeDescriptor) -> DelsarteCode:
    """Materialize the matrix space described by an AnticodeDescriptor."""
    field = desc.support.field
    k, m = desc.k, desc.m
    mats: list[Matrix] = []
    if desc.kind == "column":
        for u in desc.support.basis:
            for j in range(m):
                mats.append(tuple(tuple(u[i] if jj == j else 0 for jj in range(m))
                                  for i in range(k)))
    else:
        for i in range(k):
            for w in desc.support.basis:
                mats.append(tuple(w if ii == i else (0,) * m for ii in range(k)))
    return DelsarteCode.from_matrices(field, k, m, mats)


def enumerate_optimal_anticodes(field: Field, k: int, m: int, r: int,
                                guard: GuardConfig | None = None
                                ) -> Iterator[AnticodeDescriptor]:
    """Every optimal anticode of maximum rank r in Mat(k x m, F_q), once.

    Column-support descriptors over all r-dimensional U <= F_q^k; for k = m
    additionally row-support descriptors, deduplicated against the column
    family by canonical space equality (overlap happens exactly at r = 0
    and r = k, but the dedup does not assume that).
    """
    if not 0 <= r <= k:
        raise ValueError(f"need 0 <= r <= k, got r={r}")
    column_spaces = set()
    for u in la.enumerate_subspaces(field, k, r, guard=guard):
        desc = AnticodeDescriptor("column", k, m, u)
        column_spaces.add(anticode_space(desc).space)
        yield desc
    if k == m:
        for w in la.enumerate_subspaces(field, m, r, guard=guard):
            desc = AnticodeDescriptor("row", k, m, w)
            if anticode_space(desc).space not in column_spaces:
                yield desc


@lru_cache(maxsize=None)
def _anticode_spaces_by_rank(field: Field, k: int, m: int
                             ) -> tuple[tuple[Subspace, ...], ...]:
    """Entry r = the flattened spaces of all maxrk-r optimal anticodes."""
    out = []
    for r in range(k + 1):
        out.append(tuple(anticode_space(d).space
                         for d in enumerate_optimal_anticodes(field, k, m, r)))
    return tuple(out)


def delsarte_generalized_weights(code: DelsarteCode,
                                 guard: GuardConfig | None = None) -> tuple[int, ...]:
    """Profile (a_1, ..., a_t): least dim/m of an optimal anticode whose
    intersection with the code has dimension >= r."""
    t = code.dim
    if t == 0:
        raise ValueError("the zero code has no weight profile")
    by_rank = _anticode_spaces_by_rank(code.field, code.k, code.m)
    best: list[int | None] = [None] * (t + 1)
    for r_anticode in range(code.k + 1):
        for space in by_rank[r_anticode]:
            inter = la.intersection_dim(space, code.space)
            for r in range(1, min(inter, t) + 1):
                if best[r] is None:
                    best[r] = r_anticode
        if all(b is not None for b in best[1:]):
            break
    assert all(b is not None for b in best[1:])
    profile = tuple(best[1:])  # type: ignore[arg-type]
    assert all(a <= b for a, b in zip(profile, profile[1:]))
    return profile


def oggier_sboui_delsarte_weights(code: DelsarteCode,
                                  guard: GuardConfig | None = None) -> tuple[int, ...]:
    """Profile (a'_1, ..., a'_t): minimum of maxrk over r-dim subcodes.

    Pointwise at most the anticode-based profile, with strict inequality
    possible; no duality theory survives for this variant.
    """
    t = code.dim
    if t == 0:
        raise ValueError("the zero code has no weight profile")
    field = code.field
    gens = code.space.basis
    profile = []
    for r in range(1, t + 1):
        best = code.k
        for coeffs in la.enumerate_subspaces(field, t, r, guard=guard):
            rows = tuple(la.vec_mat(field, w, gens) for w in coeffs.basis)
            sub = DelsarteCode(field, code.k, code.m,
                               Subspace.from_vectors(field, code.k * code.m, rows))
            best = min(best, maxrk(sub, guard=guard))
        profile.append(best)
    dgw = delsarte_generalized_weights(code, guard=guard)
    assert all(a <= b for a, b in zip(profile, dgw)), \
        "min-max-rank profile must lower-bound the anticode profile"
    return tuple(profile)


# ---------------------------------------------------------------------------
# duality
# ---------------------------------------------------------------------------

def trace_product(field: Field, a: Matrix, b: Matrix) -> int:
    """Tr(a @ b^T), the non-degenerate bilinear form behind duality."""
    prod = la.mat_mul(field, a, la.transpose(b))
    acc = 0
    for i in range(len(prod)):
        acc = field.add(acc, prod[i][i])
    return acc


def delsarte_dual(code: DelsarteCode) -> DelsarteCode:
    """Dual under the trace product.

    Under row-major flattening the trace product is the standard inner
    product of F_q^(km), so this is a plain kernel computation.
    """
    return DelsarteCode(code.field, code.k, code.m, la.dual_subspace(code.space))


def transpose_code(code: DelsarteCode) -> DelsarteCode:
    if code.k != code.m:
        raise ValueError("transpose code requires a square matrix shape")
    return DelsarteCode.from_matrices(
        code.field, code.k, code.m,
        [la.transpose(g) for g in code.basis_matrices()])


def left_mul_code(a: Matrix, code: DelsarteCode) -> DelsarteCode:
    """The code { a @ M : M in C } for invertible a (k x k)."""
    if not la.is_invertible(code.field, a):
        raise ValueError("transform matrix is singular")
    return DelsarteCode.from_matrices(
        code.field, code.k, code.m,
        [la.mat_mul(code.field, a, g) for g in code.basis_matrices()])


def right_mul_code(code: DelsarteCode, b: Matrix) -> DelsarteCode:
    """The code { M @ b : M in C } for invertible b (m x m)."""
    if not la.is_invertible(code.field, b):
        raise ValueError("transform matrix is singular")
    return DelsarteCode.from_matrices(
        code.field, code.k, code.m,
        [la.mat_mul(code.field, g, b) for g in code.basis_matrices()])


# ---------------------------------------------------------------------------
# association with rank-metric codes over extension fields
# ---------------------------------------------------------------------------

def associate(code: rk.GabidulinCode,
              basis: Iterable[int] | None = None) -> DelsarteCode:
    """Matrix code of coordinates of codewords over a basis of F_{q^m}/F_q.

    Defaults to the polynomial basis.  The F_q-dimension is m times the
    F_{q^m}-dimension; minimum and maximum rank are preserved; changing the
    basis multiplies the result on the right by the change matrix.
    """
    field = code.field
    sub = field.subfield()
    m = field.m
    basis = tuple(basis) if basis is not None else field.polynomial_basis()
    if len(basis) != m:
        raise ValueError(f"a basis of the extension must have {m} elements")
    gmat = tuple(field.coeffs(g) for g in basis)
    try:
        ginv = la.invert_matrix(sub, gmat)
    except ValueError:
        raise ValueError("the given elements are not a basis over F_q") from None

    def matrix_of(v: Vector) -> Matrix:
        return tuple(la.vec_mat(sub, field.coeffs(x), ginv) for x in v)

    gens = [matrix_of(la.vec_scale(field, gamma, row))
            for row in code.space.basis for gamma in basis]
    return DelsarteCode.from_matrices(sub, code.k, m, gens)


def finer_check(code: rk.GabidulinCode,
                basis: Iterable[int] | None = None,
                rng: Random | None = None,
                guard: GuardConfig | None = None) -> bool:
    """Check that the rank-weight profile of a nonzero code is recovered from
    the matrix-code profile: m_r = a_{r*m - eps} for all valid (r, eps).

    With an rng, additionally checks the left-multiplication compatibility
    of the association on a random invertible matrix over F_q.
    """
    rank_profile = rk.generalized_rank_weights(code, guard=guard)
    assoc = associate(code, basis)
    a_profile = delsarte_generalized_weights(assoc, guard=guard)
    m = code.field.m
    ok = all(a_profile[r * m - eps - 1] == rank_profile[r - 1]
             for r in range(1, code.dim + 1) for eps in range(m))
    if rng is not None:
        a = la.random_invertible(code.field.subfield(), code.k, rng)
        lhs = associate(rk.right_mul_code(code, la.transpose(a)), basis)
        rhs = left_mul_code(a, assoc)
        ok = ok and lhs.space == rhs.space
    return ok


# ---------------------------------------------------------------------------
# weight profiles and dual reconstruction
# ---------------------------------------------------------------------------

def validate_profile(profile: tuple[int, ...], k: int, m: int) -> None:
    """Raise ValueError naming the violated constraint if `profile` cannot
    be the generalized weight profile of a code in Mat(k x m, F_q)."""
    t = len(profile)
    if not 1 <= t <= k * m:
        raise ValueError(f"profile length must be in [1, {k * m}]")
    for r, a in enumerate(profile, start=1):
        if not isinstance(a, int):
            raise ValueError("profile entries must be integers")
        if a < -(-r // m):
            raise ValueError(f"entry a_{r}={a} below the lower bound ceil(r/m)")
        if a > k - (t - r) // m:
            raise ValueError(f"entry a_{r}={a} above the upper bound k - floor((t-r)/m)")
    for r in range(1, t):
        if profile[r - 1] > profile[r]:
            raise ValueError(f"profile not monotone at position {r}")
    for r in range(1, t - m + 1):
        if profile[r - 1] >= profile[r + m - 1]:
            raise ValueError(f"profile not strictly increasing from a_{r} to a_{r + m}")


def weight_sets(profile: tuple[int, ...], k: int, m: int,
                s: int) -> tuple[frozenset[int], frozenset[int]]:
    """The slice { a_{s+im} } of the profile along step m, and its
    reflection { k+1-a_{s+im} }.  Empty sets are fine."""
    t = len(profile)
    idx = [r for r in range(1, t + 1) if (r - s) % m == 0]
    return (frozenset(profile[r - 1] for r in idx),
            frozenset(k + 1 - profile[r - 1] for r in idx))


def dual_weights_from_weights(profile: Iterable[int], k: int, m: int,
                              _involution_check: bool = True) -> tuple[int, ...]:
    """Weight profile of the dual code, reconstructed from the primal one.

    For each residue p mod m the dual profile's slice is the complement in
    [k] of the primal's reflected slice shifted by t, filled in increasing
    order (the slices are strictly increasing along step m).  Raises
    ValueError on profiles that violate the structural constraints or whose
    slice sizes cannot be matched.
    """
    profile = tuple(profile)
    t = len(profile)
    validate_profile(profile, k, m)
    if t >= k * m:
        raise ValueError("dual reconstruction needs 1 <= t <= km - 1")
    dual_len = k * m - t
    out = [0] * dual_len
    for p in range(1, m + 1):
        idx = [r for r in range(1, dual_len + 1) if (r - p) % m == 0]
        _, reflected = weight_sets(profile, k, m, p + t)
        values = sorted(set(range(1, k + 1)) - reflected)
        if len(values) != len(idx):
            raise ValueError("inconsistent profile: slice sizes do not match")
        for r, v in zip(idx, values):
            out[r - 1] = v
    result = tuple(out)
    if _involution_check:
        back = dual_weights_from_weights(result, k, m, _involution_check=False)
        if back != profile:
            raise ValueError("inconsistent profile: reconstruction is not involutive")
    return result
