"""Exact arithmetic in Q(sqrt3, sqrt11, sqrt247).

An element is stored as eight integer numerators over one shared positive
denominator, against the basis

    1, sqrt3, sqrt11, sqrt33, sqrt247, sqrt741, sqrt2717, sqrt8151

Basis index ``i`` is a 3-bit mask over the generators (sqrt3, sqrt11, sqrt247),
so the product of two basis elements is ``MUL_TABLE[i][j] = (coef, i ^ j)``.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence, Union

GENERATORS = (3, 11, 247)
RADICANDS = (1, 3, 11, 33, 247, 741, 2717, 8151)
BASIS_NAMES = ("1", "√3", "√11", "√33", "√247", "√741", "√2717", "√8151")

# (rational coefficient, resulting basis index) for basis[i] * basis[j].
MUL_TABLE = (
    ((1, 0), (1, 1), (1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (1, 7)),
    ((1, 1), (3, 0), (1, 3), (3, 2), (1, 5), (3, 4), (1, 7), (3, 6)),
    ((1, 2), (1, 3), (11, 0), (11, 1), (1, 6), (1, 7), (11, 4), (11, 5)),
    ((1, 3), (3, 2), (11, 1), (33, 0), (1, 7), (3, 6), (11, 5), (33, 4)),
    ((1, 4), (1, 5), (1, 6), (1, 7), (247, 0), (247, 1), (247, 2), (247, 3)),
    ((1, 5), (3, 4), (1, 7), (3, 6), (247, 1), (741, 0), (247, 3), (741, 2)),
    ((1, 6), (1, 7), (11, 4), (11, 5), (247, 2), (247, 3), (2717, 0), (2717, 1)),
    ((1, 7), (3, 6), (11, 5), (33, 4), (247, 3), (741, 2), (2717, 1), (8151, 0)),
)

_SQRTS = tuple(r ** 0.5 for r in RADICANDS)

Number = Union[int, Fraction, "FieldElement"]


def derive_mul_table() -> tuple:
    """Rebuild the basis multiplication table from the generator bitmasks."""
    rows = []
    for i in range(8):
        row = []
        for j in range(8):
            coef = 1
            for bit, g in enumerate(GENERATORS):
                if (i & j) >> bit & 1:
                    coef *= g
            row.append((coef, i ^ j))
        rows.append(tuple(row))
    return tuple(rows)


def _normalize(nums: Sequence[int], den: int) -> tuple[tuple[int, ...], int]:
    if den < 0:
        nums = [-n for n in nums]
        den = -den
    g = den
    for n in nums:
        if n:
            g = gcd(g, n)
            if g == 1:
                break
    if g != 1:
        nums = [n // g for n in nums]
        den //= g
    if not any(nums):
        return (0,) * 8, 1
    return tuple(nums), den


class FieldElement:
    """Immutable element of the degree-8 field Q(√3, √11, √247)."""

    __slots__ = ("num", "den", "_hash", "_float", "_key")

    def __init__(self, coeffs: Iterable = (0,) * 8):
        fr = [Fraction(c) for c in coeffs]
        if len(fr) != 8:
            raise ValueError("a field element needs exactly 8 coefficients")
        den = 1
        for f in fr:
            den = den * f.denominator // gcd(den, f.denominator)
        nums = [f.numerator * (den // f.denominator) for f in fr]
        self.num, self.den = _normalize(nums, den)
        self._hash = self._float = self._key = None

    @classmethod
    def _raw(cls, nums: Sequence[int], den: int) -> "FieldElement":
        obj = object.__new__(cls)
        obj.num, obj.den = _normalize(nums, den)
        obj._hash = obj._float = obj._key = None
        return obj

    @classmethod
    def rational(cls, value) -> "FieldElement":
        f = Fraction(value)
        return cls._raw((f.numerator, 0, 0, 0, 0, 0, 0, 0), f.denominator)

    @classmethod
    def sqrt(cls, radicand: int, coef=1) -> "FieldElement":
        """``coef * sqrt(radicand)`` for one of the eight basis radicands."""
        idx = RADICANDS.index(radicand)
        f = Fraction(coef)
        nums = [0] * 8
        nums[idx] = f.numerator
        return cls._raw(nums, f.denominator)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(n, self.den) for n in self.num)

    def is_zero(self) -> bool:
        return not any(self.num)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self.num[0], self.den)

    def in_subfield(self) -> bool:
        """True when the element lies in Q(√3, √11), i.e. has no √247 part."""
        return not any(self.num[4:])

    def sort_key(self) -> tuple:
        """Total order token consistent with equality (not the real order)."""
        if self._key is None:
            self._key = self.coeffs
        return self._key

    def __float__(self) -> float:
        if self._float is None:
            self._float = sum(n * s for n, s in zip(self.num, _SQRTS) if n) / self.den
        return self._float

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            return other
        if isinstance(other, (int, Fraction)):
            return FieldElement.rational(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.den, other.den
        if a == b:
            return FieldElement._raw([x + y for x, y in zip(self.num, other.num)], a)
        return FieldElement._raw([x * b + y * a for x, y in zip(self.num, other.num)], a * b)

    __radd__ = __add__

    def __neg__(self):
        obj = object.__new__(FieldElement)
        obj.num = tuple(-n for n in self.num)
        obj.den = self.den
        obj._hash = obj._float = obj._key = None
        return obj

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            f = Fraction(other)
            return FieldElement._raw([n * f.numerator for n in self.num], self.den * f.denominator)
        if not isinstance(other, FieldElement):
            return NotImplemented
        out = [0] * 8
        right = [(j, m) for j, m in enumerate(other.num) if m]
        for i, n in enumerate(self.num):
            if not n:
                continue
            row = MUL_TABLE[i]
            for j, m in right:
                coef, k = row[j]
                out[k] += coef * n * m
        return FieldElement._raw(out, self.den * other.den)

    __rmul__ = __mul__

    def conjugate(self, generator: int) -> "FieldElement":
        """Flip the sign of one generator (0: √3, 1: √11, 2: √247)."""
        bit = 1 << generator
        return FieldElement._raw([-n if i & bit else n for i, n in enumerate(self.num)], self.den)

    def inverse(self) -> "FieldElement":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero field element")
        if self.is_rational():
            return FieldElement.rational(Fraction(self.den, self.num[0]))
        # Multiplying by the conjugates over each generator in turn kills that
        # generator; after three rounds only a rational norm remains.
        acc = FieldElement.rational(1)
        cur = self
        for g in range(3):
            conj = cur.conjugate(g)
            acc = acc * conj
            cur = cur * conj
        norm = cur.as_fraction()
        return acc * (1 / norm)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self * (1 / Fraction(other))
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** -exponent
        result = FieldElement.rational(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # -- comparison / hashing ---------------------------------------------

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.den == other.den and self.num == other.num
        if isinstance(other, (int, Fraction)):
            f = Fraction(other)
            return self.den == f.denominator and self.num == (f.numerator,) + (0,) * 7
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __bool__(self):
        return not self.is_zero()

    # -- text -------------------------------------------------------------

    def to_tokens(self) -> str:
        """Eight whitespace-separated ``p/q`` tokens in basis order."""
        return " ".join(f"{c.numerator}/{c.denominator}" for c in self.coeffs)

    @classmethod
    def from_tokens(cls, tokens: Sequence[str]) -> "FieldElement":
        if len(tokens) != 8:
            raise ValueError(f"expected 8 rational tokens, got {len(tokens)}")
        return cls(Fraction(t) for t in tokens)

    def __repr__(self):
        return f"FieldElement({self})"

    def __str__(self):
        terms = []
        for c, name in zip(self.coeffs, BASIS_NAMES):
            if c:
                terms.append(str(c) if name == "1" else f"{c}{name}")
        return " + ".join(terms) if terms else "0"


ZERO = FieldElement.rational(0)
ONE = FieldElement.rational(1)
SQRT3 = FieldElement.sqrt(3)
SQRT11 = FieldElement.sqrt(11)
SQRT33 = FieldElement.sqrt(33)
SQRT247 = FieldElement.sqrt(247)


def as_element(value: Number) -> FieldElement:
    if isinstance(value, FieldElement):
        return value
    return FieldElement.rational(value)


def real_bounds(x: FieldElement, bits: int) -> tuple[int, int]:
    """Integers lo, hi with lo <= x * den * 2**bits <= hi."""
    from math import isqrt

    lo = hi = 0
    for n, r in zip(x.num, RADICANDS):
        if not n:
            continue
        s = isqrt(r << (2 * bits))
        exact = s * s == r << (2 * bits)
        top = s if exact else s + 1
        if n > 0:
            lo += n * s
            hi += n * top
        else:
            lo += n * top
            hi += n * s
    return lo, hi


def real_sign(x: FieldElement) -> int:
    """Sign of x as a real number, decided by integer interval refinement."""
    if x.is_zero():
        return 0
    bits = 64
    while True:
        lo, hi = real_bounds(x, bits)
        if lo > 0:
            return 1
        if hi < 0:
            return -1
        bits *= 2


def sort_real(items: list, value) -> list:
    """Sort ``items`` by the exact real value ``value(item)`` (stable).

    Floats order everything; runs of nearly equal floats are re-sorted with
    the exact comparison.
    """
    from functools import cmp_to_key

    keyed = sorted(((float(value(it)), k, it) for k, it in enumerate(items)), key=lambda t: t[:2])
    out, run = [], []

    def flush():
        if len(run) > 1:
            run.sort(key=cmp_to_key(lambda a, b: compare_real(value(a[2]), value(b[2])) or a[1] - b[1]))
        out.extend(t[2] for t in run)
        run.clear()

    for t in keyed:
        if run and abs(t[0] - run[-1][0]) > 1e-9 * max(1.0, abs(t[0])):
            flush()
        run.append(t)
    flush()
    return out


def compare_real(a: FieldElement, b: FieldElement) -> int:
    """-1, 0 or 1 as a < b, a == b, a > b on the real line."""
    fa, fb = float(a), float(b)
    if abs(fa - fb) > 1e-9 * max(1.0, abs(fa), abs(fb)):
        return -1 if fa < fb else 1
    return real_sign(a - b)
