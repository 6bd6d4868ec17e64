"""Structure constants N_{r,s} of the E6 Chevalley basis.

The 30 extraspecial constants are free sign parameters.  Every other
constant follows from the four-term relation and the orbit relations

    N_{s,r} = -N_{r,s},   N_{r,s} = N_{s,z} = N_{z,r} (r + s + z = 0),
    N_{-r,-s} = -N_{r,s}.

All roots have squared length 2, so the length denominators cancel.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterator, Mapping, Union

from .rootsys import Root, RootSystem, add_vectors, build_e6, neg, parse_root, precedes
from .signcalc import VARIABLES, SignMonomial, all_positive

Value = Union[SignMonomial, int]

# Extraspecial pairs and the parameter attached to each.
TABLE2: tuple[tuple[str, str, str], ...] = (
    ("a", "c", "a1"),
    ("a", "c+d", "a2"),
    ("a", "b+c+d", "a3"),
    ("a", "c+d+e", "a4"),
    ("a", "b+c+d+e", "a5"),
    ("a", "b+c+2d+e", "a6"),
    ("a", "c+d+e+f", "a7"),
    ("a", "b+c+d+e+f", "a8"),
    ("a", "b+c+2d+e+f", "a9"),
    ("a", "b+c+2d+2e+f", "a0"),
    ("c", "d", "b1"),
    ("c", "b+d", "b2"),
    ("c", "d+e", "b3"),
    ("c", "b+d+e", "b4"),
    ("c", "a+b+c+2d+e", "b5"),
    ("c", "d+e+f", "b6"),
    ("c", "b+d+e+f", "b7"),
    ("c", "a+b+c+2d+e+f", "b8"),
    ("c", "a+b+c+2d+2e+f", "b9"),
    ("d", "b", "g1"),
    ("d", "e", "g2"),
    ("d", "b+c+d+e", "g3"),
    ("d", "e+f", "g4"),
    ("d", "b+c+d+e+f", "g5"),
    ("d", "a+b+2c+2d+2e+f", "g6"),
    ("b", "d+e", "d1"),
    ("b", "d+e+f", "d2"),
    ("b", "a+b+2c+3d+2e+f", "d3"),
    ("e", "f", "e1"),
    ("e", "b+c+2d+e+f", "e2"),
)


class DerivationConflict(RuntimeError):
    """Two derivations of the same constant disagree."""

    def __init__(self, pair, first, second, witness_first, witness_second):
        self.pair = pair
        self.values = (first, second)
        self.witnesses = (witness_first, witness_second)
        super().__init__(
            f"N{pair}: {first} ({witness_first}) conflicts with {second} ({witness_second})"
        )


class UnderdeterminedError(RuntimeError):
    """A four-term relation was applied with more than one unknown."""


def extraspecial_pair(t: Root, system: RootSystem | None = None) -> tuple[Root, Root]:
    """The special pair (r, s) of t whose first root is earliest in the order."""
    system = system or build_e6()
    if t not in system or not system.is_positive(t) or sum(t) < 2:
        raise ValueError(f"{t} is not a positive root of height >= 2")
    return system.decompositions(t)[0]


@dataclass(frozen=True)
class ExtraspecialChoice:
    """Maps each non-simple positive root t to (r, s, value) with N_{r,s} = value."""

    seeds: Mapping[Root, tuple[Root, Root, Value]]

    @classmethod
    def table2(cls) -> ExtraspecialChoice:
        seeds = {}
        for r_name, s_name, var in TABLE2:
            r, s = parse_root(r_name), parse_root(s_name)
            seeds[add_vectors(r, s)] = (r, s, SignMonomial.var(var))
        return cls(seeds)

    def evaluated(self, assignment: Mapping[str, int]) -> ExtraspecialChoice:
        return ExtraspecialChoice(
            {t: (r, s, v.evaluate(assignment) if isinstance(v, SignMonomial) else v)
             for t, (r, s, v) in self.seeds.items()}
        )

    def validate(self, system: RootSystem) -> None:
        expected = {t for t in system.positives if sum(t) >= 2}
        if set(self.seeds) != expected:
            raise ValueError("extraspecial choice must cover exactly the non-simple positive roots")
        for t, (r, s, _) in self.seeds.items():
            if (r, s) != extraspecial_pair(t, system):
                raise ValueError(f"({r}, {s}) is not the extraspecial pair of {t}")
        symbols = [v for _, _, v in self.seeds.values() if isinstance(v, SignMonomial)]
        if symbols and len(symbols) == len(self.seeds):
            if sorted(m.parity for m in symbols) != sorted(1 << k for k in range(len(VARIABLES))):
                raise ValueError("extraspecial parameters must be a bijection onto the sign variables")


@dataclass(frozen=True)
class ConstantTable:
    """N_{r,s} for every ordered pair of roots with r + s a root."""

    system: RootSystem
    values: Mapping[tuple[Root, Root], Value]
    mode: str = "symbolic"
    provenance: Mapping[tuple[Root, Root], str] = field(default_factory=dict, repr=False, compare=False)

    def n(self, r: Root, s: Root) -> Value | None:
        """N_{r,s}, or None when r + s is not a root."""
        return self.values.get((tuple(r), tuple(s)))

    def __getitem__(self, pair) -> Value:
        return self.values[tuple(map(tuple, pair))]

    def __len__(self):
        return len(self.values)

    def by_index(self, i: int, j: int) -> Value | None:
        return self.n(self.system.root(i), self.system.root(j))

    def items(self):
        return self.values.items()

    def with_value(self, pair, value) -> ConstantTable:
        """Copy with a single entry replaced (no closure applied)."""
        vals = dict(self.values)
        vals[pair] = value
        return ConstantTable(self.system, vals, self.mode)


def _orbit(r: Root, s: Root, value: Value) -> Iterator[tuple[tuple[Root, Root], Value]]:
    z = neg(add_vectors(r, s))
    for x, y in ((r, s), (s, z), (z, r)):
        yield (x, y), value
        yield (y, x), -value
        yield (neg(x), neg(y)), -value
        yield (neg(y), neg(x)), value


def _collect(terms) -> dict[int, int]:
    """Sum of +-monomials (or ints) as {parity: integer coefficient}, zeros dropped."""
    acc: dict[int, int] = defaultdict(int)
    for v in terms:
        if isinstance(v, SignMonomial):
            acc[v.parity] += v.sign
        else:
            acc[0] += v
    return {k: c for k, c in acc.items() if c}


def _from_sum(acc: dict[int, int], numeric: bool) -> Value:
    if not acc:
        raise UnderdeterminedError("relation forces a zero structure constant")
    if len(acc) != 1:
        raise UnderdeterminedError(f"relation does not determine a single sign: {acc}")
    (parity, coeff), = acc.items()
    if numeric:
        return coeff
    if coeff not in (1, -1):
        raise UnderdeterminedError(f"non-unit coefficient {coeff}")
    return SignMonomial(coeff, parity)


class _Deriver:
    def __init__(self, system: RootSystem, numeric: bool):
        self.system = system
        self.numeric = numeric
        self.values: dict[tuple[Root, Root], Value] = {}
        self.origin: dict[tuple[Root, Root], str] = {}

    def assign(self, r: Root, s: Root, value: Value, why: str) -> None:
        for pair, v in _orbit(r, s, value):
            old = self.values.get(pair)
            if old is None:
                self.values[pair] = v
                self.origin[pair] = why
            elif old != v:
                raise DerivationConflict(pair, old, v, self.origin[pair], why)

    def four_term(self, r1: Root, r2: Root, r3: Root, r4: Root, why: str) -> bool:
        """Apply the four-term relation; solve for one unknown or check consistency.

        Returns True if a new constant was determined.
        """
        known_terms = []
        unknown = None
        for (a, b), (c, d) in (((r1, r2), (r3, r4)), ((r2, r3), (r1, r4)), ((r3, r1), (r2, r4))):
            if add_vectors(a, b) not in self.system or add_vectors(c, d) not in self.system:
                continue
            x, y = self.values.get((a, b)), self.values.get((c, d))
            if x is not None and y is not None:
                known_terms.append(x * y)
            elif unknown is not None or (x is None and y is None):
                raise UnderdeterminedError(f"more than one unknown in {why}")
            else:
                unknown = ((c, d), x) if y is None else ((a, b), y)
        acc = _collect(known_terms)
        if unknown is None:
            if acc:
                raise DerivationConflict((r1, r2, r3, r4), acc, 0, why, "four-term relation")
            return False
        pair, cofactor = unknown
        rhs = _from_sum({k: -c for k, c in acc.items()}, self.numeric)
        self.assign(*pair, rhs * cofactor, why)
        return True


def derive_constants(choice: ExtraspecialChoice | None = None,
                     system: RootSystem | None = None) -> ConstantTable:
    """Derive the full table from the extraspecial seeds.

    Positive sums t are processed in increasing order.  For each t the seed is
    installed, then every other special pair (r, s) of t is solved from the
    four-term relation on (r1, s1, -r, -s), with (r1, s1) extraspecial.  All
    remaining special-pair combinations for t are then re-checked.
    """
    system = system or build_e6()
    choice = choice or ExtraspecialChoice.table2()
    choice.validate(system)
    numeric = not any(isinstance(v, SignMonomial) for _, _, v in choice.seeds.values())
    d = _Deriver(system, numeric)
    for t in system.positives:
        if sum(t) < 2:
            continue
        r1, s1, value = choice.seeds[t]
        d.assign(r1, s1, value, f"seed N({r1},{s1})")
        pairs = system.decompositions(t)
        for r, s in pairs:
            if (r, s) == (r1, s1):
                continue
            d.four_term(r1, s1, neg(r), neg(s), f"four-term ({r1},{s1},-{r},-{s})")
        for (p1, p2), (q1, q2) in itertools.combinations(pairs, 2):
            d.four_term(p1, p2, neg(q1), neg(q2), f"check ({p1},{p2},-{q1},-{q2})")
    missing = [
        (r, s) for r in system.roots for s in system.roots
        if add_vectors(r, s) in system and (r, s) not in d.values
    ]
    if missing:
        raise UnderdeterminedError(f"{len(missing)} constants left undetermined, e.g. {missing[0]}")
    return ConstantTable(system, d.values, "numeric" if numeric else "symbolic", d.origin)


def evaluate_table(table: ConstantTable, assignment: Mapping[str, int] | None = None) -> ConstantTable:
    """Specialise a symbolic table under a sign assignment (default all +1)."""
    assignment = assignment or all_positive()
    vals = {k: (v.evaluate(assignment) if isinstance(v, SignMonomial) else v)
            for k, v in table.values.items()}
    return ConstantTable(table.system, vals, "numeric")


def positive_table() -> ConstantTable:
    """The special case where every extraspecial constant is +1."""
    return evaluate_table(derive_constants())


@dataclass
class RelationReport:
    checked: dict[str, int] = field(default_factory=lambda: dict.fromkeys(("i", "ii", "iii", "iv"), 0))
    violations: dict[str, list] = field(default_factory=lambda: {k: [] for k in ("i", "ii", "iii", "iv")})

    @property
    def ok(self) -> bool:
        return not any(self.violations.values())

    def summary(self) -> str:
        return ", ".join(f"({k}) {self.checked[k]} checked, {len(self.violations[k])} violated"
                         for k in self.checked)


def check_relations(table: ConstantTable) -> RelationReport:
    """Exhaustively test relations (i)-(iv) on a complete table."""
    system = table.system
    roots = system.roots
    rootset = set(roots)
    N = table.values
    rep = RelationReport()

    for (r, s), v in N.items():
        rep.checked["i"] += 1
        if N.get((s, r)) != -v:
            rep.violations["i"].append((r, s))
        rep.checked["iii"] += 1
        p, _ = system.root_string(r, s)
        other = N.get((neg(r), neg(s)))
        expected = -(p + 1) ** 2
        prod = None if other is None else v * other
        if isinstance(prod, SignMonomial):
            good = prod.parity == 0 and prod.sign == expected
        else:
            good = prod == expected
        if not good:
            rep.violations["iii"].append((r, s))
        z = neg(add_vectors(r, s))
        rep.checked["ii"] += 1
        if not (N.get((s, z)) == v and N.get((z, r)) == v):
            rep.violations["ii"].append((r, s, z))

    for r1, r2, r3 in itertools.product(roots, repeat=3):
        r4 = neg(add_vectors(add_vectors(r1, r2), r3))
        if r4 not in rootset:
            continue
        quad = (r1, r2, r3, r4)
        if any(x == neg(y) for x, y in itertools.combinations(quad, 2)):
            continue
        rep.checked["iv"] += 1
        terms = []
        for (a, b), (c, d) in (((r1, r2), (r3, r4)), ((r2, r3), (r1, r4)), ((r3, r1), (r2, r4))):
            x, y = N.get((a, b)), N.get((c, d))
            if x is not None and y is not None:
                terms.append(x * y)
        if _collect(terms):
            rep.violations["iv"].append(quad)
    return rep


def special_pairs(system: RootSystem) -> list[tuple[Root, Root]]:
    """All 120 special pairs, grouped by sum in increasing order."""
    return [p for t in system.positives for p in system.decompositions(t)]


def is_extraspecial(r: Root, s: Root, system: RootSystem) -> bool:
    t = add_vectors(r, s)
    return precedes(r, s) and t in system and system.decompositions(t)[0] == (r, s)
