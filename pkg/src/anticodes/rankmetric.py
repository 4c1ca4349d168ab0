"""Gabidulin rank-metric codes: subspaces of F_{q^m}^k with the rank weight.

The rank of a vector is the F_q-dimension of the span of its entries.
Frobenius-closed subspaces (stable under coordinatewise q-th power) play
the role that coordinate-subset free codes play in the Hamming metric:
they are exactly the subspaces admitting a basis with entries in F_q, are
detected by inspecting the RREF basis, and coincide with the optimal
anticodes of the metric.  Generalized rank weights, the alternative
min-max-rank profile, and eavesdropping security profiles all reduce to
intersections with these spaces.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from . import linalg as la
from .fields import Field
from .guards import DEFAULT_GUARD, GuardConfig
from .linalg import Subspace, Vector


@dataclass(frozen=True)
class GabidulinCode:
    """A subspace of F_{q^m}^k over F_{q^m}, with k <= m enforced."""

    field: Field
    k: int
    space: Subspace

    def __post_init__(self) -> None:
        if not 1 <= self.k <= self.field.m:
            raise ValueError(
                f"k <= m required for rank-metric codes, got k={self.k}, m={self.field.m}")
        if self.space.field != self.field or self.space.n != self.k:
            raise ValueError("subspace does not match the declared ambient space")

    @classmethod
    def from_generators(cls, field: Field, k: int,
                        generators: Iterable[Vector]) -> "GabidulinCode":
        return cls(field, k, Subspace.from_vectors(field, k, generators))

    @property
    def dim(self) -> int:
        return self.space.dim


def rank_of_vector(field: Field, v: Vector) -> int:
    """F_q-dimension of the span of the entries of v.

    Computed as the rank over F_q of the coordinate matrix with respect to
    the polynomial basis; the value does not depend on the basis choice.
    """
    rows = tuple(field.coeffs(x) for x in v)
    return la.rank(field.subfield(), rows)


def frobenius_vector(field: Field, v: Vector) -> Vector:
    return tuple(field.frobenius(x) for x in v)


def is_frobenius_closed(space: Subspace) -> bool:
    """True iff the canonical RREF basis has all entries in F_q."""
    field = space.field
    return all(field.in_subfield(x) for row in space.basis for x in row)


def is_frobenius_closed_direct(space: Subspace) -> bool:
    """Definition-level test: the q-th power of each basis vector stays in
    the space.  Must agree with :func:`is_frobenius_closed` everywhere."""
    return all(space.contains(frobenius_vector(space.field, row))
               for row in space.basis)


def fq_basis(space: Subspace) -> la.Matrix:
    """A basis of a Frobenius-closed space with all entries in F_q.

    This is just the RREF basis; entries are valid element codes of the
    subfield as-is.
    """
    if not is_frobenius_closed(space):
        raise ValueError("space is not Frobenius-closed")
    return space.basis


def enumerate_frobenius_closed(field: Field, k: int, d: int,
                               guard: GuardConfig | None = None) -> Iterator[Subspace]:
    """All d-dimensional Frobenius-closed subspaces of F_{q^m}^k.

    In bijection with the d-dimensional subspaces of F_q^k: the lift of an
    RREF basis over F_q is already the RREF basis of its F_{q^m}-span.
    """
    sub = field.subfield()
    for w in la.enumerate_subspaces(sub, k, d, guard=guard):
        yield Subspace(field, k, w.basis)


def minrk(code: GabidulinCode, guard: GuardConfig | None = None) -> int:
    if code.dim == 0:
        raise ValueError("minimum rank of the zero code is undefined")
    it = la.span_vectors(code.field, code.space.basis, code.k,
                         guard=guard, context="minrk")
    next(it)
    return min(rank_of_vector(code.field, v) for v in it)


def maxrk_space(space: Subspace, guard: GuardConfig | None = None) -> int:
    """Maximum vector rank over a subspace, by exhaustive scan."""
    best = 0
    for v in la.span_vectors(space.field, space.basis, space.n,
                             guard=guard, context="maxrk"):
        r = rank_of_vector(space.field, v)
        if r > best:
            best = r
    return best


def maxrk(code: GabidulinCode, guard: GuardConfig | None = None) -> int:
    return maxrk_space(code.space, guard=guard)


def is_optimal_gabidulin_anticode(space: Subspace,
                                  guard: GuardConfig | None = None) -> bool:
    """True iff dim equals maximum rank (metric characterization).

    Computed independently of the Frobenius-closure test; the two agree on
    every subspace.
    """
    return space.dim == maxrk_space(space, guard=guard)


def generalized_rank_weights(code: GabidulinCode,
                             guard: GuardConfig | None = None) -> tuple[int, ...]:
    """Profile (m_1, ..., m_t): minimum dimension of a Frobenius-closed
    space meeting the code in dimension >= r."""
    t = code.dim
    if t == 0:
        raise ValueError("the zero code has no weight profile")
    best: list[int | None] = [None] * (t + 1)
    for d in range(code.k + 1):
        for v in enumerate_frobenius_closed(code.field, code.k, d, guard=guard):
            inter = la.intersection_dim(v, code.space)
            for r in range(1, min(inter, t) + 1):
                if best[r] is None:
                    best[r] = d
        if all(b is not None for b in best[1:]):
            break
    assert all(b is not None for b in best[1:])
    profile = tuple(best[1:])  # type: ignore[arg-type]
    assert all(a < b for a, b in zip(profile, profile[1:]))
    return profile


_anticode_cache: dict[tuple[Field, int], tuple[tuple[int, Subspace], ...]] = {}


def optimal_anticodes_exhaustive(field: Field, k: int,
                                 guard: GuardConfig | None = None
                                 ) -> tuple[tuple[int, Subspace], ...]:
    """Every optimal Gabidulin anticode in F_{q^m}^k, by brute filtering of
    all subspaces with the dim = maxrk test.  Sorted by dimension."""
    key = (field, k)
    if key not in _anticode_cache:
        guard = guard or DEFAULT_GUARD
        total = sum(la.gaussian_binomial(k, d, field.order) for d in range(k + 1))
        guard.check_subspaces(total, f"optimal_anticodes_exhaustive(k={k})")
        found = []
        for sub in la.enumerate_all_subspaces(field, k, guard=guard):
            if is_optimal_gabidulin_anticode(sub, guard=guard):
                found.append((sub.dim, sub))
        found.sort(key=lambda pair: pair[0])
        _anticode_cache[key] = tuple(found)
    return _anticode_cache[key]


def rank_weights_via_anticodes(code: GabidulinCode,
                               guard: GuardConfig | None = None) -> tuple[int, ...]:
    """Rank weight profile minimized over exhaustively filtered optimal
    anticodes instead of Frobenius-closed spaces.  The two profiles agree;
    both paths are kept so the equality stays testable."""
    t = code.dim
    if t == 0:
        raise ValueError("the zero code has no weight profile")
    best: list[int | None] = [None] * (t + 1)
    for dim_a, anticode in optimal_anticodes_exhaustive(code.field, code.k, guard=guard):
        inter = la.intersection_dim(anticode, code.space)
        for r in range(1, min(inter, t) + 1):
            if best[r] is None:
                best[r] = dim_a
        if all(b is not None for b in best[1:]):
            break
    assert all(b is not None for b in best[1:])
    return tuple(best[1:])  # type: ignore[arg-type]


def oggier_sboui_rank_weights(code: GabidulinCode,
                              guard: GuardConfig | None = None) -> tuple[int, ...]:
    """Profile (m'_1, ..., m'_t): minimum of maxrk over r-dim subcodes."""
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
            sub = Subspace.from_vectors(field, code.k, rows)
            best = min(best, maxrk_space(sub, guard=guard))
        profile.append(best)
    return tuple(profile)


def security_profile(code: GabidulinCode,
                     guard: GuardConfig | None = None) -> tuple[int, ...]:
    """(Delta_0, ..., Delta_k): the largest code intersection achievable by
    a Frobenius-closed space of each dimension.  This bounds what an
    eavesdropper observing that many network links can learn."""
    if code.dim == 0:
        raise ValueError("security profile of the zero code is undefined")
    deltas = []
    for mu in range(code.k + 1):
        deltas.append(max(la.intersection_dim(v, code.space)
                          for v in enumerate_frobenius_closed(
                              code.field, code.k, mu, guard=guard)))
    return tuple(deltas)


def worst_case_drops(code: GabidulinCode,
                     guard: GuardConfig | None = None) -> frozenset[int]:
    """Dimensions mu where the security profile strictly jumps."""
    deltas = security_profile(code, guard=guard)
    return frozenset(mu for mu in range(1, code.k + 1)
                     if deltas[mu] > deltas[mu - 1])


def right_mul_code(code: GabidulinCode, a: la.Matrix) -> GabidulinCode:
    """The code { c @ a : c in C } for an invertible k x k matrix over F_q."""
    field = code.field
    if any(not field.in_subfield(x) for row in a for x in row):
        raise ValueError("transform matrix must have entries in F_q")
    return GabidulinCode(field, code.k, la.right_mul_subspace(code.space, a))
