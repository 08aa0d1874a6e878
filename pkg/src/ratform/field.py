"""Exact scalar arithmetic over the rationals and over prime fields GF(p).

Scalar values are plain Python objects: `fractions.Fraction` over the
rationals (always reduced, denominator positive) and canonical int
residues in [0, p) over GF(p).  All arithmetic goes through a field
context, which keeps results canonical and tallies the number of field
operations performed -- useful for checking that an algorithm's cost
scales polynomially.

Because the representations are canonical, `==` on scalar values is
exact mathematical equality.
"""

from __future__ import annotations

import re
from fractions import Fraction

__all__ = ["Field", "Rationals", "PrimeField"]

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")
_INT_RE = re.compile(r"^[+-]?\d+$")


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class Field:
    """Scalar context: arithmetic, parsing/formatting, operation count.

    Instances are immutable apart from `op_count`, a running tally of the
    arithmetic operations (add, sub, mul, div, neg, inv and the fused dot
    product) executed through the context.  Two contexts compare equal iff
    they describe the same field, so values may flow between structures
    built from equal contexts.
    """

    __slots__ = ("op_count",)

    kind = ""

    def __init__(self):
        self.op_count = 0

    def reset_op_count(self) -> None:
        self.op_count = 0

    def describe(self) -> str:
        raise NotImplementedError

    def __repr__(self):
        return f"<field {self.describe()}>"

    def __eq__(self, other):
        return isinstance(other, Field) and self.describe() == other.describe()

    def __hash__(self):
        return hash(self.describe())

    # -- arithmetic (implemented by subclasses) --

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def div(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def dot(self, xs, ys):
        """Sum of pairwise products; counted as len muls + len-1 adds."""
        raise NotImplementedError

    # -- conversions --

    def from_int(self, k: int):
        raise NotImplementedError

    def parse(self, text: str):
        raise NotImplementedError

    def format(self, a) -> str:
        raise NotImplementedError

    # -- predicates (not counted as field operations) --

    def is_zero(self, a) -> bool:
        return a == self.zero

    def eq(self, a, b) -> bool:
        return a == b


class Rationals(Field):
    """The field of rational numbers with arbitrary-precision values."""

    __slots__ = ()

    kind = "rational"
    zero = Fraction(0)
    one = Fraction(1)

    def describe(self) -> str:
        return "rational"

    def add(self, a, b):
        self.op_count += 1
        return a + b

    def sub(self, a, b):
        self.op_count += 1
        return a - b

    def mul(self, a, b):
        self.op_count += 1
        return a * b

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero scalar")
        self.op_count += 1
        return a / b

    def neg(self, a):
        self.op_count += 1
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        self.op_count += 1
        return 1 / a

    def dot(self, xs, ys):
        n = len(xs)
        if n == 0:
            return self.zero
        self.op_count += 2 * n - 1
        return sum(x * y for x, y in zip(xs, ys))

    def from_int(self, k: int):
        return Fraction(k)

    def parse(self, text: str):
        if not _RATIONAL_RE.match(text):
            raise ValueError(f"not a rational scalar: {text!r}")
        return Fraction(text)  # raises ZeroDivisionError on "a/0"

    def format(self, a) -> str:
        return str(a)


class PrimeField(Field):
    """GF(p) for a prime modulus; residues kept canonical in [0, p)."""

    __slots__ = ("p",)

    kind = "gf"
    zero = 0
    one = 1

    def __init__(self, p: int):
        super().__init__()
        if not _is_prime(p):
            raise ValueError(f"modulus {p} is not prime")
        self.p = p

    def describe(self) -> str:
        return f"gf {self.p}"

    def add(self, a, b):
        self.op_count += 1
        return (a + b) % self.p

    def sub(self, a, b):
        self.op_count += 1
        return (a - b) % self.p

    def mul(self, a, b):
        self.op_count += 1
        return (a * b) % self.p

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero scalar")
        self.op_count += 1
        return (a * pow(b, -1, self.p)) % self.p

    def neg(self, a):
        self.op_count += 1
        return (-a) % self.p

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        self.op_count += 1
        return pow(a, -1, self.p)

    def dot(self, xs, ys):
        n = len(xs)
        if n == 0:
            return 0
        self.op_count += 2 * n - 1
        return sum(x * y for x, y in zip(xs, ys)) % self.p

    def from_int(self, k: int):
        return k % self.p

    def parse(self, text: str):
        if not _INT_RE.match(text):
            raise ValueError(f"not a GF({self.p}) scalar: {text!r}")
        return int(text) % self.p

    def format(self, a) -> str:
        return str(a)
