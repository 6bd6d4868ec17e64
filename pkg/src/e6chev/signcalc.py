"""Monomials in the 30 formal sign parameters.

Every parameter squares to 1, so a monomial is a global sign together with
the set of parameters occurring an odd number of times.  The text form uses
ASCII family letters ``a b g d e`` for alpha, beta, gamma, delta, epsilon,
e.g. ``-a1*a2*b1``; the empty monomial prints as ``1`` or ``-1``.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Mapping

FAMILIES = (
    ("a", (1, 2, 3, 4, 5, 6, 7, 8, 9, 0)),
    ("b", (1, 2, 3, 4, 5, 6, 7, 8, 9)),
    ("g", (1, 2, 3, 4, 5, 6)),
    ("d", (1, 2, 3)),
    ("e", (1, 2)),
)

VARIABLES: tuple[str, ...] = tuple(f"{fam}{i}" for fam, idxs in FAMILIES for i in idxs)
VAR_BIT: dict[str, int] = {name: k for k, name in enumerate(VARIABLES)}

GREEK = {"a": "α", "b": "β", "g": "γ", "d": "δ", "e": "ε"}

_TOKEN = re.compile(r"([abgde])(\d+)$")


class MonomialParseError(ValueError):
    pass


@dataclass(frozen=True, slots=True)
class SignMonomial:
    sign: int = 1
    parity: int = 0

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +-1, got {self.sign}")
        if not 0 <= self.parity < 1 << len(VARIABLES):
            raise ValueError("parity out of range")

    @classmethod
    def var(cls, name: str) -> SignMonomial:
        return cls(1, 1 << VAR_BIT[name])

    def __mul__(self, other):
        if isinstance(other, SignMonomial):
            return SignMonomial(self.sign * other.sign, self.parity ^ other.parity)
        if other in (1, -1):
            return SignMonomial(self.sign * other, self.parity)
        return NotImplemented

    __rmul__ = __mul__

    def __neg__(self):
        return SignMonomial(-self.sign, self.parity)

    def variables(self) -> list[str]:
        return [v for k, v in enumerate(VARIABLES) if self.parity >> k & 1]

    def evaluate(self, assignment: Mapping[str, int]) -> int:
        value = self.sign
        for v in self.variables():
            value *= assignment[v]
        return value

    def __str__(self):
        return format_monomial(self)

    def __repr__(self):
        return f"SignMonomial({format_monomial(self)!r})"

    def pretty(self) -> str:
        """Greek rendering with grouped subscripts, e.g. ``-α₁₆β₅``."""
        groups: dict[str, str] = {}
        for v in self.variables():
            groups.setdefault(v[0], "")
            groups[v[0]] += v[1]
        body = "".join(f"{GREEK[f]}_{{{idx}}}" if len(idx) > 1 else f"{GREEK[f]}_{idx}"
                       for f, idx in groups.items())
        body = body or "1"
        return ("-" if self.sign < 0 else "") + body


ONE = SignMonomial()


def mul(x: SignMonomial, y: SignMonomial) -> SignMonomial:
    return x * y


def evaluate(m: SignMonomial, assignment: Mapping[str, int]) -> int:
    return m.evaluate(assignment)


def format_monomial(m: SignMonomial) -> str:
    names = m.variables()
    body = "*".join(names) if names else "1"
    return ("-" if m.sign < 0 else "") + body


def parse_monomial(text: str) -> SignMonomial:
    """Parse ``[-]f1*f2*...`` or ``[-]1``.

    A factor may group several subscripts of one family, so ``a12`` reads as
    a1*a2 (the reference tables write alpha_{12} this way).
    """
    s = text.strip()
    sign = 1
    if s.startswith("-"):
        sign, s = -1, s[1:]
    elif s.startswith("+"):
        s = s[1:]
    if s == "1":
        return SignMonomial(sign, 0)
    parity = 0
    for tok in s.split("*"):
        tok = tok.strip()
        m = _TOKEN.match(tok)
        if not m:
            raise MonomialParseError(f"bad factor {tok!r} in {text!r}")
        for digit in m.group(2):
            name = m.group(1) + digit
            if name not in VAR_BIT:
                raise MonomialParseError(f"bad factor {tok!r} in {text!r}: no variable {name}")
            parity ^= 1 << VAR_BIT[name]
    return SignMonomial(sign, parity)


def all_positive() -> dict[str, int]:
    return dict.fromkeys(VARIABLES, 1)


def random_assignment(rng: random.Random) -> dict[str, int]:
    return {v: rng.choice((1, -1)) for v in VARIABLES}


def read_assignment(path) -> dict[str, int]:
    """Read a ``var,value`` CSV; missing variables default to +1."""
    import csv

    out = all_positive()
    with open(path, newline="", encoding="utf-8") as fh:
        for row in csv.DictReader(fh):
            name = row["var"].strip()
            if name not in VAR_BIT:
                raise ValueError(f"unknown sign parameter {name!r}")
            value = int(row["value"])
            if value not in (1, -1):
                raise ValueError(f"{name}: value must be 1 or -1")
            out[name] = value
    return out
