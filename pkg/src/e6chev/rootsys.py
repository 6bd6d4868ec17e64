"""The E6 root system in the fundamental basis a, b, c, d, e, f.

Roots are plain 6-tuples of integers, the coefficients over
``(a, b, c, d, e, f)``.  Positive roots are numbered 1..36 in the
``precedes`` order; negative roots carry the negated index.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field
from fractions import Fraction

Root = tuple[int, ...]

FUNDAMENTAL = ("a", "b", "c", "d", "e", "f")

# expansion order used when comparing two vectors: f, e, b, d, c, a
ORDER_BASIS = (5, 4, 1, 3, 2, 0)

HALF = Fraction(1, 2)

# R^8 coordinates (e1..e8) of the fundamental roots
FUNDAMENTAL_COORDS: dict[str, tuple[Fraction, ...]] = {
    "a": (HALF, -HALF, -HALF, -HALF, -HALF, -HALF, -HALF, HALF),
    "b": tuple(Fraction(x) for x in (1, 1, 0, 0, 0, 0, 0, 0)),
    "c": tuple(Fraction(x) for x in (-1, 1, 0, 0, 0, 0, 0, 0)),
    "d": tuple(Fraction(x) for x in (0, -1, 1, 0, 0, 0, 0, 0)),
    "e": tuple(Fraction(x) for x in (0, 0, -1, 1, 0, 0, 0, 0)),
    "f": tuple(Fraction(x) for x in (0, 0, 0, -1, 1, 0, 0, 0)),
}


class OrderError(ValueError):
    """Raised when comparing a vector with itself under ``precedes``."""


class UndefinedStringError(ValueError):
    """Raised for a root string through s in direction r when s = +-r."""


class _Opposite:
    """Marker returned by :meth:`RootSystem.add` for r + (-r)."""

    def __bool__(self):
        return False

    def __repr__(self):
        return "OPPOSITE"


OPPOSITE = _Opposite()


def simple_root(label: str) -> Root:
    i = FUNDAMENTAL.index(label)
    return tuple(int(k == i) for k in range(6))


def height(r: Root) -> int:
    return sum(r)


def neg(r: Root) -> Root:
    return tuple(-x for x in r)


def add_vectors(r: Root, s: Root) -> Root:
    return tuple(x + y for x, y in zip(r, s))


def scale(k: int, r: Root) -> Root:
    return tuple(k * x for x in r)


def precedes(x: Root, y: Root) -> bool:
    """True iff x comes strictly before y.

    The difference y - x is expanded in the basis (f, e, b, d, c, a); x precedes
    y when the first nonzero coefficient of that expansion is positive.
    """
    for i in ORDER_BASIS:
        diff = y[i] - x[i]
        if diff:
            return diff > 0
    raise OrderError(f"precedes is irreflexive: {x} compared with itself")


def _order_cmp(x: Root, y: Root) -> int:
    if x == y:
        return 0
    return -1 if precedes(x, y) else 1


order_key = functools.cmp_to_key(_order_cmp)


def tuple_str(r: Root) -> str:
    """``011210`` style string for a positive root; signed coefficients joined otherwise."""
    if all(0 <= x <= 9 for x in r):
        return "".join(str(x) for x in r)
    return ",".join(str(x) for x in r)


def root_name(r: Root) -> str:
    """Human form such as ``a+b+2c+2d+e`` or ``-c-d``."""
    parts = []
    for coeff, label in zip(r, FUNDAMENTAL):
        if coeff == 0:
            continue
        mag = abs(coeff)
        term = label if mag == 1 else f"{mag}{label}"
        if coeff < 0:
            parts.append("-" + term)
        else:
            parts.append(("+" if parts else "") + term)
    return "".join(parts) or "0"


def parse_root(text: str) -> Root:
    """Inverse of :func:`root_name`; tolerates spaces and doubled minus signs."""
    s = text.replace(" ", "").replace("$", "")
    while "--" in s:
        s = s.replace("--", "-")
    coeffs = [0] * 6
    i = 0
    if not s:
        raise ValueError("empty root expression")
    while i < len(s):
        sign = 1
        if s[i] in "+-":
            sign = -1 if s[i] == "-" else 1
            i += 1
        j = i
        while j < len(s) and s[j].isdigit():
            j += 1
        mult = int(s[i:j]) if j > i else 1
        if j >= len(s) or s[j] not in FUNDAMENTAL:
            raise ValueError(f"bad root expression {text!r}")
        coeffs[FUNDAMENTAL.index(s[j])] += sign * mult
        i = j + 1
    return tuple(coeffs)


def _dot(u, v) -> Fraction:
    return sum((x * y for x, y in zip(u, v)), Fraction(0))


def r8_roots() -> set[tuple[Fraction, ...]]:
    """The 72 roots written directly in R^8 (e1..e8)."""
    out = set()
    for i, j in itertools.combinations(range(5), 2):
        for si, sj in itertools.product((1, -1), repeat=2):
            v = [Fraction(0)] * 8
            v[i], v[j] = Fraction(si), Fraction(sj)
            out.add(tuple(v))
    for signs in itertools.product((1, -1), repeat=5):
        if signs.count(-1) % 2:
            continue
        for overall in (1, -1):
            v = [overall * HALF * s for s in signs] + [-overall * HALF, -overall * HALF, overall * HALF]
            out.add(tuple(v))
    return out


@dataclass(frozen=True)
class RootSystem:
    """Immutable E6 root system with Table-1 numbering."""

    positives: tuple[Root, ...]
    _index: dict[Root, int] = field(repr=False)
    _coords: dict[Root, tuple[Fraction, ...]] = field(repr=False)

    @property
    def roots(self) -> tuple[Root, ...]:
        """All 72 roots: positives 1..36 then negatives -1..-36."""
        return self.positives + tuple(neg(r) for r in self.positives)

    @property
    def simple(self) -> tuple[Root, ...]:
        return tuple(simple_root(x) for x in FUNDAMENTAL)

    def __len__(self):
        return 2 * len(self.positives)

    def __contains__(self, vec) -> bool:
        return tuple(vec) in self._index

    def index(self, r: Root) -> int:
        """Signed Table-1 number of a root."""
        try:
            return self._index[tuple(r)]
        except KeyError:
            raise ValueError(f"{r} is not a root of E6") from None

    def root(self, k: int) -> Root:
        if k == 0 or abs(k) > len(self.positives):
            raise ValueError(f"no root with index {k}")
        r = self.positives[abs(k) - 1]
        return r if k > 0 else neg(r)

    def make_root(self, coeffs) -> Root:
        """Validate and normalise a coefficient vector."""
        r = tuple(int(x) for x in coeffs)
        if len(r) != 6:
            raise ValueError(f"expected 6 coefficients, got {len(r)}")
        if any(x > 0 for x in r) and any(x < 0 for x in r):
            raise ValueError(f"mixed-sign vector {r} is never a root")
        self.index(r)
        return r

    def is_positive(self, r: Root) -> bool:
        return self.index(r) > 0

    def coords(self, r: Root) -> tuple[Fraction, ...]:
        return self._coords[tuple(r)]

    def scalar_product(self, r: Root, s: Root) -> int:
        val = _dot(self.coords(r), self.coords(s))
        assert val.denominator == 1
        return int(val)

    def add(self, r: Root, s: Root):
        """r + s if it is a root, ``OPPOSITE`` if it is zero, else None."""
        t = add_vectors(r, s)
        if not any(t):
            return OPPOSITE
        return t if t in self._index else None

    def root_string(self, r: Root, s: Root) -> tuple[int, int]:
        """(p, q) with s - p r, ..., s + q r the r-string through s."""
        if s == r or s == neg(r):
            raise UndefinedStringError(f"root string of {s} through {r} is undefined")
        p = 0
        while add_vectors(s, scale(-(p + 1), r)) in self._index:
            p += 1
        q = 0
        while add_vectors(s, scale(q + 1, r)) in self._index:
            q += 1
        return p, q

    def decompositions(self, t: Root) -> list[tuple[Root, Root]]:
        """Special pairs (r, s) of positive roots with r + s = t and r before s."""
        out = []
        for r in self.positives:
            s = add_vectors(t, neg(r))
            if s in self._index and self._index[s] > 0 and precedes(r, s):
                out.append((r, s))
        return out


def _expand_coords(r: Root) -> tuple[Fraction, ...]:
    vec = [Fraction(0)] * 8
    for coeff, label in zip(r, FUNDAMENTAL):
        for k, x in enumerate(FUNDAMENTAL_COORDS[label]):
            vec[k] += coeff * x
    return tuple(vec)


@functools.lru_cache(maxsize=None)
def build_e6() -> RootSystem:
    """Construct E6 by closing the simple roots under r -> r + alpha.

    For a simply-laced system, r + alpha is a root exactly when the scalar
    product (r, alpha) equals -1.
    """
    simple = [simple_root(x) for x in FUNDAMENTAL]
    simple_coords = [FUNDAMENTAL_COORDS[x] for x in FUNDAMENTAL]
    found = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for r in frontier:
            rc = _expand_coords(r)
            for i, alpha in enumerate(simple_coords):
                if _dot(rc, alpha) == -1:
                    t = add_vectors(r, simple[i])
                    if t not in found:
                        found.add(t)
                        nxt.append(t)
        frontier = nxt
    positives = tuple(sorted(found, key=order_key))
    index: dict[Root, int] = {}
    coords: dict[Root, tuple[Fraction, ...]] = {}
    for k, r in enumerate(positives, start=1):
        index[r] = k
        index[neg(r)] = -k
        c = _expand_coords(r)
        coords[r] = c
        coords[neg(r)] = tuple(-x for x in c)
    return RootSystem(positives, index, coords)
