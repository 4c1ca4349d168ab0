"""Exact arithmetic in the tower F_p <= F_q = F_{p^e} <= F_{q^m}.

Elements are canonical integer codes.  An element of F_{p^e} with
coefficient tuple (c_0, ..., c_{e-1}) over F_p (low degree first) has code
sum(c_i * p**i); an element of F_{q^m} with coefficient tuple over F_q has
code sum(c_i * q**i).  The embedding of F_q into F_{q^m} is therefore the
identity on the codes 0..q-1, and zero/one are always 0/1.

Fields here are tiny (the whole library is enumeration-based), so every
operation is a table lookup built once per field.  No discrete-log tables
are involved; multiplication tables come straight from polynomial
arithmetic modulo the defining irreducible polynomials.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Callable, Iterable

_MAX_ORDER = 1024  # table-based arithmetic only; plenty for this library


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def digits(value: int, base: int, length: int) -> tuple[int, ...]:
    """Base-`base` digits of `value`, low digit first, padded to `length`."""
    out = []
    for _ in range(length):
        out.append(value % base)
        value //= base
    return tuple(out)


def undigits(ds: Iterable[int], base: int) -> int:
    value = 0
    for d in reversed(tuple(ds)):
        value = value * base + d
    return value


class _Arith:
    """Coefficient arithmetic used while constructing extension tables."""

    __slots__ = ("order", "add", "sub", "mul", "inv")

    def __init__(self, order: int, add: Callable[[int, int], int],
                 sub: Callable[[int, int], int], mul: Callable[[int, int], int],
                 inv: Callable[[int], int]):
        self.order = order
        self.add = add
        self.sub = sub
        self.mul = mul
        self.inv = inv


def _prime_arith(p: int) -> _Arith:
    return _Arith(p, lambda a, b: (a + b) % p, lambda a, b: (a - b) % p,
                  lambda a, b: (a * b) % p, lambda a: pow(a, p - 2, p))


def _table_arith(add: list[list[int]], mul: list[list[int]],
                 sub: list[list[int]], inv: list[int]) -> _Arith:
    return _Arith(len(inv), lambda a, b: add[a][b], lambda a, b: sub[a][b],
                  lambda a, b: mul[a][b], lambda a: inv[a])


# ---------------------------------------------------------------------------
# polynomials over an _Arith, as trimmed low-degree-first tuples
# ---------------------------------------------------------------------------

def _poly_trim(a: tuple[int, ...]) -> tuple[int, ...]:
    i = len(a)
    while i > 0 and a[i - 1] == 0:
        i -= 1
    return a[:i]


def _poly_mul(a: tuple[int, ...], b: tuple[int, ...], ar: _Arith) -> tuple[int, ...]:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            if bj:
                out[i + j] = ar.add(out[i + j], ar.mul(ai, bj))
    return _poly_trim(tuple(out))


def _poly_mod(a: tuple[int, ...], mod: tuple[int, ...], ar: _Arith) -> tuple[int, ...]:
    """Remainder of `a` modulo `mod` (any nonzero leading coefficient)."""
    a = list(_poly_trim(a))
    d = len(mod) - 1
    lead_inv = ar.inv(mod[-1])
    while len(a) > d:
        c = ar.mul(a[-1], lead_inv)
        if c != 0:
            off = len(a) - 1 - d
            for i in range(d):
                a[off + i] = ar.sub(a[off + i], ar.mul(c, mod[i]))
        a.pop()
        while a and a[-1] == 0:
            a.pop()
    return tuple(a)


def _poly_is_irreducible(poly: tuple[int, ...], ar: _Arith) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    d = len(poly) - 1
    if d < 1:
        return False
    for deg in range(1, d // 2 + 1):
        for code in range(ar.order ** deg):
            den = digits(code, ar.order, deg) + (1,)
            if not _poly_mod(poly, den, ar):
                return False
    return True


def _smallest_irreducible(degree: int, ar: _Arith) -> tuple[int, ...]:
    """Monic irreducible of given degree whose low-degree-first coefficient
    code (an integer base `ar.order`) is smallest.  Deterministic."""
    for code in range(ar.order ** degree):
        cand = digits(code, ar.order, degree) + (1,)
        if _poly_is_irreducible(cand, ar):
            return cand
    raise AssertionError("no irreducible polynomial found")  # unreachable


def _extension_tables(ar: _Arith, mod: tuple[int, ...]):
    """Add/mul/sub/inv tables for the quotient of ar[x] by monic `mod`."""
    d = len(mod) - 1
    base = ar.order
    order = base ** d
    coeff = [digits(v, base, d) for v in range(order)]

    add = [[undigits(tuple(ar.add(x, y) for x, y in zip(coeff[a], coeff[b])), base)
            for b in range(order)] for a in range(order)]
    sub = [[undigits(tuple(ar.sub(x, y) for x, y in zip(coeff[a], coeff[b])), base)
            for b in range(order)] for a in range(order)]

    mul = [[0] * order for _ in range(order)]
    for a in range(order):
        pa = _poly_trim(coeff[a])
        for b in range(a, order):
            prod = _poly_mod(_poly_mul(pa, _poly_trim(coeff[b]), ar), mod, ar)
            v = undigits(prod + (0,) * (d - len(prod)), base)
            mul[a][b] = v
            mul[b][a] = v

    inv = [0] * order
    for a in range(1, order):
        for b in range(1, order):
            if mul[a][b] == 1:
                inv[a] = b
                break
        else:
            raise AssertionError(f"non-invertible element {a}: modulus not irreducible")
    return add, sub, mul, inv


def _prime_tables(p: int):
    add = [[(a + b) % p for b in range(p)] for a in range(p)]
    sub = [[(a - b) % p for b in range(p)] for a in range(p)]
    mul = [[(a * b) % p for b in range(p)] for a in range(p)]
    inv = [0] + [pow(a, p - 2, p) for a in range(1, p)]
    return add, sub, mul, inv


class Field:
    """The field F_{q^m}, q = p**e, with tabulated exact arithmetic.

    Elements are plain ints in range(order); see the module docstring for
    the coefficient encoding.  Instances are immutable and value-comparable
    on (p, e, m, f, g).  Use :func:`make_field` rather than constructing
    directly; it caches instances.
    """

    def __init__(self, p: int, e: int = 1, m: int = 1,
                 f: tuple[int, ...] | None = None,
                 g: tuple[int, ...] | None = None):
        if not is_prime(p):
            raise ValueError(f"p = {p} is not prime")
        if e < 1 or m < 1:
            raise ValueError("extension degrees must be >= 1")
        q = p ** e
        if q ** m > _MAX_ORDER:
            raise ValueError(f"field order {q ** m} exceeds supported maximum {_MAX_ORDER}")

        fp = _prime_arith(p)

        if e == 1:
            if f is not None:
                raise ValueError("f makes no sense for a prime base field (e = 1)")
            base_tabs = _prime_tables(p)
        else:
            if f is None:
                f = _smallest_irreducible(e, fp)
            else:
                f = tuple(x % p for x in f)
                if len(f) != e + 1 or f[-1] != 1:
                    raise ValueError(f"f must be monic of degree {e}")
                if not _poly_is_irreducible(f, fp):
                    raise ValueError("f is not irreducible over F_p")
            base_tabs = _extension_tables(fp, f)

        fq = _table_arith(base_tabs[0], base_tabs[2], base_tabs[1], base_tabs[3])

        if m == 1:
            if g is not None:
                raise ValueError("g makes no sense for a trivial top extension (m = 1)")
            tabs = base_tabs
        else:
            if g is None:
                g = _smallest_irreducible(m, fq)
            else:
                g = tuple(g)
                if len(g) != m + 1 or g[-1] != 1:
                    raise ValueError(f"g must be monic of degree {m}")
                if not all(0 <= c < q for c in g):
                    raise ValueError("g coefficients must be F_q element codes")
                if not _poly_is_irreducible(g, fq):
                    raise ValueError("g is not irreducible over F_q")
            tabs = _extension_tables(fq, g)

        self.p = p
        self.e = e
        self.m = m
        self.q = q
        self.order = q ** m
        self.f = f
        self.g = g
        self._add, self._sub, self._mul, self._inv = tabs
        self._frob = [self.pow(a, q) for a in range(self.order)]
        self._key = (p, e, m, f, g)

    # -- basic operations ---------------------------------------------------

    def _check(self, a: int) -> int:
        if not isinstance(a, int) or not 0 <= a < self.order:
            raise ValueError(f"{a!r} is not an element code of {self!r}")
        return a

    def add(self, a: int, b: int) -> int:
        return self._add[self._check(a)][self._check(b)]

    def sub(self, a: int, b: int) -> int:
        return self._sub[self._check(a)][self._check(b)]

    def neg(self, a: int) -> int:
        return self._sub[0][self._check(a)]

    def mul(self, a: int, b: int) -> int:
        return self._mul[self._check(a)][self._check(b)]

    def inv(self, a: int) -> int:
        if self._check(a) == 0:
            raise ZeroDivisionError("inversion of zero")
        return self._inv[a]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, n: int) -> int:
        self._check(a)
        if n < 0:
            a, n = self.inv(a), -n
        result, base = 1, a
        while n:
            if n & 1:
                result = self._mul[result][base]
            base = self._mul[base][base]
            n >>= 1
        return result

    def frobenius(self, a: int) -> int:
        """x -> x**q, the generator of Gal(F_{q^m} / F_q)."""
        return self._frob[self._check(a)]

    # -- structure ----------------------------------------------------------

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def elements(self) -> range:
        return range(self.order)

    def coeffs(self, a: int) -> tuple[int, ...]:
        """Coefficients of `a` over F_q (length m, low degree first)."""
        return digits(self._check(a), self.q, self.m)

    def from_coeffs(self, cs: Iterable[int]) -> int:
        cs = tuple(cs)
        if len(cs) != self.m or not all(0 <= c < self.q for c in cs):
            raise ValueError(f"need {self.m} coefficients in range({self.q})")
        return undigits(cs, self.q)

    def in_subfield(self, a: int) -> bool:
        """True iff `a` lies in the embedded copy of F_q."""
        return self._check(a) < self.q

    def polynomial_basis(self) -> tuple[int, ...]:
        """The basis 1, y, ..., y^(m-1) of F_{q^m} over F_q (as codes)."""
        return tuple(self.q ** i for i in range(self.m))

    def subfield(self) -> "Field":
        """The field F_q of this tower, as a standalone Field."""
        return make_field(self.p, self.e, 1, f=self.f)

    # -- identity -----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Field) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        return f"Field(p={self.p}, e={self.e}, m={self.m})"


@lru_cache(maxsize=None)
def _make_field(p: int, e: int, m: int, f: tuple[int, ...] | None,
                g: tuple[int, ...] | None) -> Field:
    return Field(p, e, m, f, g)


def make_field(p: int, e: int = 1, m: int = 1,
               f: Iterable[int] | None = None,
               g: Iterable[int] | None = None) -> Field:
    """Build (or fetch from cache) the field F_{(p^e)^m}.

    Omitted defining polynomials default to the monic irreducible whose
    low-degree-first coefficient code is smallest, which is deterministic
    across runs; pass explicit `f`/`g` (coefficient arrays, low degree
    first, monic) to override.
    """
    ft = None if f is None else tuple(f)
    gt = None if g is None else tuple(g)
    return _make_field(p, e, m, ft, gt)
