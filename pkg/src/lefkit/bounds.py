"""Binomial expansions and the Macaulay / Green / Gotzmann bounds.

Also the predicates on Hilbert sequences (O-sequence, SI-sequence,
unimodality, symmetry).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import NotStandard


def binom(m: int, q: int) -> int:
    """Binomial coefficient with C(m, q) = 0 whenever m < q or q < 0."""
    if q < 0 or m < q:
        return 0
    return comb(m, q)


@dataclass(frozen=True)
class BinomialExpansion:
    """``n = C(tops[0], i) + C(tops[1], i-1) + ... + C(tops[-1], j)``.

    ``terms`` holds ``(top, bottom)`` pairs with strictly decreasing tops and
    bottoms, and ``top >= bottom >= 1``.
    """

    n: int
    i: int
    terms: tuple

    def __post_init__(self):
        tops = [t for t, _ in self.terms]
        bottoms = [b for _, b in self.terms]
        if any(a <= b for a, b in zip(tops, tops[1:])):
            raise ValueError("tops must be strictly decreasing")
        if any(a != b + 1 for a, b in zip(bottoms, bottoms[1:])):
            raise ValueError("bottoms must decrease by one")
        if self.terms and (bottoms[0] != self.i or any(t < b or b < 1 for t, b in self.terms)):
            raise ValueError("invalid expansion terms")
        if sum(comb(t, b) for t, b in self.terms) != self.n:
            raise ValueError("expansion does not sum to n")

    def shift(self, a: int, b: int) -> int:
        return expansion_shift(self, a, b)

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"C({t},{b})" for t, b in self.terms)


def binomial_expansion(n: int, i: int) -> BinomialExpansion:
    """The unique greedy i-binomial expansion of ``n``."""
    if i < 1:
        raise ValueError("i must be positive")
    if n < 0:
        raise ValueError("n must be non-negative")
    terms = []
    rest = n
    k = i
    while rest > 0 and k >= 1:
        top = k
        while comb(top + 1, k) <= rest:
            top += 1
        terms.append((top, k))
        rest -= comb(top, k)
        k -= 1
    return BinomialExpansion(n, i, tuple(terms))


def expansion_shift(exp: BinomialExpansion, a: int, b: int) -> int:
    """Sum of C(top + b, bottom + a) over the expansion, with the zero convention."""
    return sum(binom(t + b, k + a) for t, k in exp.terms)


def macaulay_bound(n: int, d: int) -> int:
    """Largest h_{d+1} allowed after h_d = n."""
    if d < 1:
        raise ValueError("degree must be at least 1")
    if n <= 0:
        return 0
    return binomial_expansion(n, d).shift(1, 1)


def green_bound(n: int, d: int) -> int:
    """Upper bound for the degree-d value of a general hyperplane section."""
    if d < 1:
        raise ValueError("degree must be at least 1")
    if n <= 0:
        return 0
    return binomial_expansion(n, d).shift(0, -1)


def gotzmann_growth(n: int, d: int, s: int) -> int:
    if d < 1:
        raise ValueError("degree must be at least 1")
    if s < 0:
        raise ValueError("steps must be non-negative")
    if n <= 0:
        return 0
    return binomial_expansion(n, d).shift(s, s)


class HilbertSeq(tuple):
    """Finite Hilbert function ``(h_0, ..., h_e)`` with trailing zeros trimmed."""

    def __new__(cls, values=()):
        vals = [int(v) for v in values]
        if any(v < 0 for v in vals):
            raise ValueError("Hilbert function values are non-negative")
        while vals and vals[-1] == 0:
            vals.pop()
        return super().__new__(cls, vals)

    @property
    def socle_degree(self) -> int:
        return len(self) - 1

    def at(self, d: int) -> int:
        return self[d] if 0 <= d < len(self) else 0

    def padded(self, length: int) -> tuple:
        return tuple(self.at(d) for d in range(length))

    def __repr__(self):
        return f"HilbertSeq({tuple(self)})"

    def __str__(self):
        return "(" + ",".join(map(str, self)) + ")"


def parse_sequence(text: str) -> HilbertSeq:
    parts = [p for p in text.replace("(", "").replace(")", "").replace(" ", "").split(",") if p]
    return HilbertSeq(int(p) for p in parts)


def _require_standard(h):
    if not h or h[0] != 1:
        raise NotStandard(f"{tuple(h)} does not start with 1")


def _macaulay_ok(values) -> bool:
    """Macaulay growth on a finite (possibly zero-padded) sequence."""
    if any(v < 0 for v in values):
        return False
    for d in range(1, len(values) - 1):
        if values[d + 1] > macaulay_bound(values[d], d):
            return False
    return True


def is_o_sequence(h) -> bool:
    _require_standard(h)
    return _macaulay_ok(list(h) + [0])


def first_difference(h) -> tuple:
    """``(h_0, h_1 - h_0, ..., h_e - h_{e-1})``."""
    vals = list(h)
    return tuple(v - (vals[i - 1] if i else 0) for i, v in enumerate(vals))


def is_differentiable(h) -> bool:
    """Whether the first difference is itself an O-sequence."""
    _require_standard(h)
    diff = list(first_difference(h))
    if any(v < 0 for v in diff):
        return False
    return _macaulay_ok(diff)


def is_symmetric(h) -> bool:
    vals = tuple(h)
    return vals == vals[::-1]


def is_unimodal(h) -> bool:
    vals = list(h)
    i = 0
    while i + 1 < len(vals) and vals[i] <= vals[i + 1]:
        i += 1
    while i + 1 < len(vals) and vals[i] >= vals[i + 1]:
        i += 1
    return i == len(vals) - 1 or not vals


def is_si_sequence(h) -> bool:
    """Symmetric, with a differentiable first half (through degree floor(e/2))."""
    _require_standard(h)
    if not is_symmetric(h):
        return False
    e = len(h) - 1
    half = list(h)[: e // 2 + 1]
    return is_differentiable(half)


def positive_difference(h, length: int | None = None) -> tuple:
    """``max(h_i - h_{i-1}, 0)`` for i = 0..length-1."""
    length = len(h) + 1 if length is None else length
    vals = [h[i] if i < len(h) else 0 for i in range(length)]
    return tuple(max(v - (vals[i - 1] if i else 0), 0) for i, v in enumerate(vals))
