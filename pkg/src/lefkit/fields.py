"""Exact scalar arithmetic over QQ and prime fields GF(p).

Internally a field element is a plain Python value: an ``int`` or
``fractions.Fraction`` over QQ (integers are kept as ``int`` so that the
common integer case stays fast), and an ``int`` in ``[0, p)`` over GF(p).
:class:`Scalar` wraps such a value together with its field for callers that
want mixing of fields to be caught.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import DivisionByZero, FieldMismatch, NonPrimeModulus

RATIONALS = "rationals"
PRIME_FIELD = "prime_field"

_MAX_MODULUS = 1 << 62
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for n < 3.3e24."""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def canonical_rational(x):
    if type(x) is Fraction:
        return x.numerator if x.denominator == 1 else x
    if type(x) is int:
        return x
    if isinstance(x, (int, Fraction)):
        return canonical_rational(Fraction(x))
    raise TypeError(f"not an exact rational: {x!r}")


@dataclass(frozen=True)
class FieldSpec:
    """The base field: ``FieldSpec("rationals")`` or ``FieldSpec("prime_field", p)``."""

    kind: str
    modulus: int | None = None

    def __post_init__(self):
        if self.kind == RATIONALS:
            if self.modulus is not None:
                raise ValueError("QQ takes no modulus")
        elif self.kind == PRIME_FIELD:
            p = self.modulus
            if not isinstance(p, int) or p >= _MAX_MODULUS or not is_prime(p):
                raise NonPrimeModulus(f"GF({p}): modulus must be a prime below 2^62")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @property
    def is_rational(self) -> bool:
        return self.kind == RATIONALS

    @property
    def characteristic(self) -> int:
        return 0 if self.kind == RATIONALS else self.modulus

    def __str__(self):
        return "QQ" if self.kind == RATIONALS else f"GF({self.modulus})"

    # raw-value arithmetic; callers guarantee the values belong to this field
    def coerce(self, x):
        if self.kind == RATIONALS:
            return canonical_rational(x)
        p = self.modulus
        if type(x) is int:
            return x % p
        x = Fraction(x)
        den = x.denominator % p
        if den == 0:
            raise DivisionByZero(f"{x} has no image in GF({p})")
        return x.numerator * pow(den, -1, p) % p

    def add(self, a, b):
        if self.kind == RATIONALS:
            return canonical_rational(a + b)
        return (a + b) % self.modulus

    def sub(self, a, b):
        if self.kind == RATIONALS:
            return canonical_rational(a - b)
        return (a - b) % self.modulus

    def mul(self, a, b):
        if self.kind == RATIONALS:
            return canonical_rational(a * b)
        return a * b % self.modulus

    def neg(self, a):
        if self.kind == RATIONALS:
            return -a
        return -a % self.modulus

    def inv(self, a):
        if not a:
            raise DivisionByZero("inverse of zero")
        if self.kind == RATIONALS:
            return canonical_rational(Fraction(1) / a)
        return pow(a, -1, self.modulus)

    def div(self, a, b):
        if not b:
            raise DivisionByZero("division by zero")
        if self.kind == RATIONALS:
            return canonical_rational(Fraction(a) / b)
        return a * pow(b, -1, self.modulus) % self.modulus

    def format(self, a) -> str:
        return str(a)


QQ = FieldSpec(RATIONALS)


def GF(p: int) -> FieldSpec:
    return FieldSpec(PRIME_FIELD, p)


@dataclass(frozen=True)
class Scalar:
    """An immutable field element tagged with its field."""

    field: FieldSpec
    value: object

    def __post_init__(self):
        object.__setattr__(self, "value", self.field.coerce(self.value))

    def _check(self, other):
        if not isinstance(other, Scalar):
            other = Scalar(self.field, other)
        elif other.field != self.field:
            raise FieldMismatch(f"cannot combine {self.field} and {other.field}")
        return other

    def __add__(self, other):
        return field_arith(self, self._check(other), "add")

    def __sub__(self, other):
        return field_arith(self, self._check(other), "sub")

    def __mul__(self, other):
        return field_arith(self, self._check(other), "mul")

    def __truediv__(self, other):
        return field_arith(self, self._check(other), "div")

    def __neg__(self):
        return Scalar(self.field, self.field.neg(self.value))

    def __bool__(self):
        return bool(self.value)

    def __str__(self):
        return str(self.value)


def field_arith(a: Scalar, b: Scalar, op: str) -> Scalar:
    if a.field != b.field:
        raise FieldMismatch(f"cannot combine {a.field} and {b.field}")
    f = a.field
    if op == "add":
        v = f.add(a.value, b.value)
    elif op == "sub":
        v = f.sub(a.value, b.value)
    elif op == "mul":
        v = f.mul(a.value, b.value)
    elif op == "div":
        v = f.div(a.value, b.value)
    else:
        raise ValueError(f"unknown operation {op!r}")
    return Scalar(f, v)


def random_scalar(spec: FieldSpec, rng: random.Random, bound: int = 1 << 20) -> Scalar:
    """Integer in [1, bound] over QQ; uniform nonzero residue over GF(p)."""
    if bound < 2:
        raise ValueError("bound must be at least 2")
    if spec.is_rational:
        return Scalar(spec, rng.randint(1, bound))
    return Scalar(spec, rng.randint(1, spec.modulus - 1))
