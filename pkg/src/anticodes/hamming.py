"""Linear codes over F_q in the Hamming metric.

Generalized Hamming weights are computed two ways: straight from the
definition (minimum support size over r-dimensional subcodes) and through
optimal linear anticodes, i.e. codes attaining dim = maxwt.  For q >= 3
optimal anticodes are exactly the free codes supported on coordinate
subsets and the two computations agree; for q = 2 they can differ, which
this module reproduces rather than hides.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from . import linalg as la
from .fields import Field
from .guards import DEFAULT_GUARD, GuardConfig
from .linalg import Subspace, Vector


@dataclass(frozen=True)
class LinearCode:
    """A linear code of length n over its field."""

    field: Field
    n: int
    space: Subspace

    def __post_init__(self) -> None:
        if self.space.field != self.field or self.space.n != self.n:
            raise ValueError("subspace does not match the declared ambient space")

    @classmethod
    def from_generators(cls, field: Field, n: int,
                        generators: Iterable[Vector]) -> "LinearCode":
        return cls(field, n, Subspace.from_vectors(field, n, generators))

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def generator_matrix(self) -> la.Matrix:
        return self.space.basis


def free_code(field: Field, n: int, support: Iterable[int]) -> LinearCode:
    """The code of all vectors vanishing outside `support` (0-based)."""
    coords = sorted(set(support))
    if coords and not 0 <= coords[0] <= coords[-1] < n:
        raise ValueError("support coordinates out of range")
    basis = tuple(tuple(1 if j == i else 0 for j in range(n)) for i in coords)
    return LinearCode(field, n, Subspace(field, n, basis))


def weight(v: Vector) -> int:
    return sum(1 for x in v if x != 0)


def support(space: Subspace) -> frozenset[int]:
    """Coordinates where some vector of the subspace is nonzero (0-based).

    By linearity this is the union of the supports of any basis.
    """
    return frozenset(j for row in space.basis for j, x in enumerate(row) if x != 0)


def minwt(code: LinearCode, guard: GuardConfig | None = None) -> int:
    if code.dim == 0:
        raise ValueError("minimum weight of the zero code is undefined")
    it = la.span_vectors(code.field, code.space.basis, code.n,
                         guard=guard, context="minwt")
    next(it)  # zero vector
    return min(weight(v) for v in it)


def maxwt(code: LinearCode, guard: GuardConfig | None = None) -> int:
    """Maximum weight, by exhaustive codeword scan.

    When the support size already equals the dimension the scan is skipped:
    dim <= maxwt <= |support| squeezes the value.
    """
    chi = support(code.space)
    if len(chi) == code.dim:
        return code.dim
    return max(weight(v) for v in la.span_vectors(
        code.field, code.space.basis, code.n, guard=guard, context="maxwt"))


def generalized_hamming_weights(code: LinearCode,
                                guard: GuardConfig | None = None) -> tuple[int, ...]:
    """The profile (d_1, ..., d_t): minimum support size of an r-dim subcode.

    Subcodes are enumerated through coefficient subspaces relative to a
    basis of the code, so only q^dim-scale objects are touched.
    """
    t = code.dim
    if t == 0:
        raise ValueError("the zero code has no weight profile")
    gens = code.space.basis
    field = code.field
    profile = []
    for r in range(1, t + 1):
        best = code.n + 1
        for coeffs in la.enumerate_subspaces(field, t, r, guard=guard):
            rows = [la.vec_mat(field, w, gens) for w in coeffs.basis]
            size = len({j for row in rows for j, x in enumerate(row) if x != 0})
            if size < best:
                best = size
        profile.append(best)
    assert all(a < b for a, b in zip(profile, profile[1:])), \
        "weight profile must be strictly increasing"
    return tuple(profile)


def is_optimal_linear_anticode(code: LinearCode,
                               guard: GuardConfig | None = None) -> bool:
    """True iff dim equals maximum weight (the zero code qualifies)."""
    if code.dim == 0:
        return True
    return code.dim == maxwt(code, guard=guard)


def classify_optimal_anticode(code: LinearCode,
                              guard: GuardConfig | None = None) -> frozenset[int] | None:
    """Support set S with code == free_code(n, S), or None if non-free.

    For q >= 3 the result is always a support set; None can occur only for
    q = 2.  Raises if the input is not an optimal linear anticode.
    """
    if not is_optimal_linear_anticode(code, guard=guard):
        raise ValueError("code is not an optimal linear anticode")
    chi = support(code.space)
    if len(chi) == code.dim:
        # contained in the free code on chi with equal dimension
        return chi
    return None


@lru_cache(maxsize=None)
def _optimal_anticodes_by_dim(field: Field, n: int) -> tuple[tuple[int, Subspace], ...]:
    """Every optimal linear anticode in field^n, sorted by dimension.

    Exhaustive over all subspaces; only used at q = 2 scales where free
    codes do not exhaust the optimal anticodes.
    """
    guard = DEFAULT_GUARD
    found = []
    for sub in la.enumerate_all_subspaces(field, n, guard=guard):
        if is_optimal_linear_anticode(LinearCode(field, n, sub), guard=guard):
            found.append((sub.dim, sub))
    found.sort(key=lambda pair: pair[0])
    return tuple(found)


def ghw_via_anticodes(code: LinearCode,
                      guard: GuardConfig | None = None) -> tuple[int, ...]:
    """Weight profile computed as min dim of an optimal anticode meeting the
    code in dimension >= r.

    Equals :func:`generalized_hamming_weights` for q >= 3; for q = 2 the two
    can differ because optimal anticodes need not be free.
    """
    t = code.dim
    if t == 0:
        raise ValueError("the zero code has no weight profile")
    field = code.field
    best: list[int | None] = [None] * (t + 1)

    def record(dim_a: int, inter_dim: int) -> None:
        for r in range(1, min(inter_dim, t) + 1):
            if best[r] is None:
                best[r] = dim_a

    if field.order >= 3:
        # free codes are exactly the optimal anticodes here
        gens = code.space.basis
        from itertools import combinations
        for s in range(0, code.n + 1):
            for chosen in combinations(range(code.n), s):
                outside = [j for j in range(code.n) if j not in chosen]
                cols = tuple(tuple(row[j] for j in outside) for row in gens)
                inter = t - la.rank(field, cols)
                record(s, inter)
            if all(b is not None for b in best[1:]):
                break
    else:
        for dim_a, anticode in _optimal_anticodes_by_dim(field, code.n):
            record(dim_a, la.intersection_dim(anticode, code.space))
            if all(b is not None for b in best[1:]):
                break

    assert all(b is not None for b in best[1:])
    return tuple(best[1:])  # type: ignore[arg-type]


def hamming_dual(code: LinearCode) -> LinearCode:
    """Dual under the standard inner product."""
    return LinearCode(code.field, code.n, la.dual_subspace(code.space))
