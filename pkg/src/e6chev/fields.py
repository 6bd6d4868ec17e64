"""Exact scalar fields: the rationals and prime fields GF(p)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    k = 2
    while k * k <= n:
        if n % k == 0:
            return False
        k += 1
    return True


class Rationals:
    name = "q"
    characteristic = 0

    def __call__(self, x) -> Fraction:
        return Fraction(x)

    def inv(self, x) -> Fraction:
        return 1 / Fraction(x)

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("q")

    def __repr__(self):
        return "Q"


@dataclass(frozen=True)
class PrimeField:
    p: int

    def __post_init__(self):
        if not _is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @property
    def name(self) -> str:
        return f"fp:{self.p}"

    @property
    def characteristic(self) -> int:
        return self.p

    def __call__(self, x) -> int:
        if isinstance(x, Fraction):
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        return int(x) % self.p

    def inv(self, x) -> int:
        return pow(int(x) % self.p, -1, self.p)

    def __repr__(self):
        return f"GF({self.p})"


QQ = Rationals()


def parse_field(text: str):
    """``q`` for the rationals, ``fp:<p>`` for GF(p)."""
    if text == "q":
        return QQ
    if text.startswith("fp:"):
        return PrimeField(int(text[3:]))
    raise ValueError(f"unknown field {text!r} (expected q or fp:<prime>)")


def parse_scalar(text: str, field):
    """Integer or ``num/den`` literal mapped into the field."""
    return field(Fraction(text.strip()))
