"""Chevalley commutator constants and the full formula lists.

For roots r, s with r + s a root,

    [x_s(u), x_r(t)] = prod_{i r + j s in Phi} x_{i r + j s}(C_{ij,rs} (-t)^i u^j)

with the C constants built from the products M_{r,s,i}.  In E6 only the
(1, 1) term ever occurs, giving x_{r+s}(N_{s,r} t u).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .constants import ConstantTable
from .rootsys import Root, add_vectors, neg, scale
from .signcalc import SignMonomial

SHAPES = ((1, 1), (2, 1), (1, 2), (3, 1), (1, 3), (3, 2), (2, 3))


class StringBreakError(ValueError):
    """A root required by the M/C formulas is missing from the system."""


def _scaled(factor: Fraction, value):
    if isinstance(value, SignMonomial):
        if factor == 1:
            return value
        if factor == -1:
            return -value
        raise ValueError(f"symbolic constant scaled by non-unit {factor}")
    return factor * value


def M(r: Root, s: Root, i: int, table: ConstantTable):
    """M_{r,s,i} = N_{r,s} N_{r,r+s} ... N_{r,(i-1)r+s} / i!.

    Every root s + k r for k = 1..i must exist; otherwise StringBreakError.
    """
    if i < 1:
        raise ValueError("i must be a positive integer")
    system = table.system
    prod = None
    for k in range(i):
        base = add_vectors(s, scale(k, r))
        if add_vectors(base, r) not in system:
            raise StringBreakError(f"{add_vectors(base, r)} is not a root (M_{{{r},{s},{i}}})")
        n = table.n(r, base)
        if n is None:
            raise StringBreakError(f"no structure constant N_{{{r},{base}}}")
        prod = n if prod is None else prod * n
    return _scaled(Fraction(1, math.factorial(i)), prod)


def C(i: int, j: int, r: Root, s: Root, table: ConstantTable):
    """The commutator constant C_{ij,rs}."""
    if (i, j) not in SHAPES:
        raise ValueError(f"unsupported shape C_{{{i}{j}}}")
    if j == 1:
        return M(r, s, i, table)
    if i == 1:
        return _scaled(Fraction((-1) ** j), M(s, r, j, table))
    rs = add_vectors(r, s)
    if (i, j) == (3, 2):
        return _scaled(Fraction(1, 3), M(rs, r, 2, table))
    return _scaled(Fraction(-2, 3), M(rs, s, 2, table))


@dataclass(frozen=True)
class Term:
    """One factor x_target(coeff * t^i * u^j) of a commutator expansion."""

    i: int
    j: int
    target: Root
    c: object  # C_{ij,rs}
    coeff: object  # C_{ij,rs} * (-1)^i, the coefficient of t^i u^j


@dataclass(frozen=True)
class CommutatorRule:
    """Expansion of [x_s(u), x_r(t)]."""

    s: Root
    r: Root
    terms: tuple[Term, ...] = ()

    @property
    def trivial(self) -> bool:
        return not self.terms


def commutator_rule(s: Root, r: Root, table: ConstantTable) -> CommutatorRule:
    if s == neg(r):
        raise ValueError("[x_s, x_-s] is outside the unipotent setting")
    system = table.system
    terms = []
    for i, j in sorted(SHAPES, key=lambda ij: (ij[0] + ij[1], ij)):
        target = add_vectors(scale(i, r), scale(j, s))
        if target not in system:
            continue
        c = C(i, j, r, s, table)
        terms.append(Term(i, j, target, c, _scaled(Fraction((-1) ** i), c)))
    return CommutatorRule(s, r, tuple(terms))


@dataclass
class FormulaSet:
    case: str
    pospos: list[CommutatorRule] = field(default_factory=list)
    negneg: list[CommutatorRule] = field(default_factory=list)
    mixed: list[CommutatorRule] = field(default_factory=list)

    def lists(self) -> dict[str, list[CommutatorRule]]:
        return {"pospos": self.pospos, "negneg": self.negneg, "mixed": self.mixed}


def formula_pairs(system) -> dict[str, list[tuple[Root, Root]]]:
    """(s, r) pairs of each list, in list order.

    Positive list: s before r in the root order, r + s a root, grouped by s.
    Negative list: the negations of the positive list.
    Mixed list: s positive, r negative with s + r a negative root, grouped by s.
    """
    pos = [(s, r) for s in system.positives for r in system.positives
           if system.index(s) < system.index(r) and add_vectors(s, r) in system]
    negs = [(neg(s), neg(r)) for s, r in pos]
    mixed = []
    for s in system.positives:
        for r_pos in system.positives:
            r = neg(r_pos)
            t = add_vectors(s, r)
            if t in system and system.index(t) < 0:
                mixed.append((s, r))
    return {"pospos": pos, "negneg": negs, "mixed": mixed}


def generate_all(case: str, table: ConstantTable) -> FormulaSet:
    """Regenerate the three formula lists from a constant table.

    ``case`` is "general" (symbolic table) or "special" (numeric table).
    """
    want = {"general": "symbolic", "special": "numeric"}
    if case not in want:
        raise ValueError(f"unknown case {case!r}")
    if table.mode != want[case]:
        raise ValueError(f"{case} formulas need a {want[case]} table, got {table.mode}")
    out = FormulaSet(case)
    for name, pairs in formula_pairs(table.system).items():
        getattr(out, name).extend(commutator_rule(s, r, table) for s, r in pairs)
    return out


def render_coeff(value) -> str:
    """Coefficient text in the monomial grammar (numeric values print as 1 / -1)."""
    if isinstance(value, SignMonomial):
        return str(value)
    if isinstance(value, Fraction) and value.denominator == 1:
        value = value.numerator
    return str(value)
