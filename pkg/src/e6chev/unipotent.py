"""Words in positive root elements x_r(t) and their collected normal form.

A canonical element is the product x_{r_1}(t_1) x_{r_2}(t_2) ... x_{r_36}(t_36)
taken in the fixed root order; it is stored as the vector (t_1, ..., t_36).
Collection rewrites an arbitrary word into this form using

    x_r(t) x_r(u) = x_r(t + u)
    x_s(u) x_r(t) = x_r(t) x_s(u) x_{r+s}(N_{s,r} t u)
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from .constants import ConstantTable
from .fields import QQ
from .rootsys import Root, add_vectors

Letter = tuple[int, object]  # (positive root index, scalar)


class MixedWordError(ValueError):
    """Raised for letters on negative roots."""


@dataclass(frozen=True)
class CanonicalUnipotent:
    coeffs: tuple
    field: object

    def letters(self) -> list[Letter]:
        return [(k, c) for k, c in enumerate(self.coeffs, start=1) if c]

    def is_identity(self) -> bool:
        return not any(self.coeffs)

    def __str__(self):
        return " ".join(f"x{k}({c})" for k, c in self.letters()) or "1"


class UnipotentGroup:
    """The positive unipotent subgroup over ``field`` for a numeric constant table."""

    def __init__(self, table: ConstantTable, field=QQ):
        if table.mode != "numeric":
            raise ValueError("collection needs a numeric constant table")
        self.table = table
        self.field = field
        self.system = table.system
        n = len(self.system.positives)
        self._sum: dict[tuple[int, int], tuple[int, object]] = {}
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                ri, rj = self.system.root(i), self.system.root(j)
                t = add_vectors(ri, rj)
                if t in self.system:
                    self._sum[i, j] = (self.system.index(t), field(int(table.n(ri, rj))))

    @property
    def identity(self) -> CanonicalUnipotent:
        return CanonicalUnipotent((self.field(0),) * len(self.system.positives), self.field)

    def letter(self, root, t) -> CanonicalUnipotent:
        return self.collect([(root, t)])

    def _normalise(self, word: Iterable) -> list[Letter]:
        out = []
        for root, t in word:
            k = root if isinstance(root, int) else self.system.index(tuple(root))
            if k <= 0:
                raise MixedWordError(f"letter on negative root {root} is not supported")
            t = self.field(t)
            if t:
                out.append((k, t))
        return out

    def collect(self, word: Iterable, rng: random.Random | None = None) -> CanonicalUnipotent:
        """Collect a word of (root or index, scalar) letters.

        With ``rng`` the rewrite position is chosen at random among all
        applicable ones; the result does not depend on the schedule.
        """
        letters = self._normalise(word)
        while True:
            spots = [i for i in range(len(letters) - 1) if letters[i][0] >= letters[i + 1][0]]
            if not spots:
                break
            i = rng.choice(spots) if rng else spots[0]
            (a, u), (b, t) = letters[i], letters[i + 1]
            if a == b:
                merged = self.field(u + t)
                repl = [(a, merged)] if merged else []
            else:
                repl = [(b, t), (a, u)]
                hit = self._sum.get((a, b))
                if hit:
                    target, n = hit
                    c = self.field(n * t * u)
                    if c:
                        repl.append((target, c))
            letters[i:i + 2] = repl
        coeffs = [self.field(0)] * len(self.system.positives)
        for k, t in letters:
            coeffs[k - 1] = t
        return CanonicalUnipotent(tuple(coeffs), self.field)

    def multiply(self, x: CanonicalUnipotent, y: CanonicalUnipotent) -> CanonicalUnipotent:
        return self.collect(x.letters() + y.letters())

    def invert(self, x: CanonicalUnipotent) -> CanonicalUnipotent:
        return self.collect([(k, self.field(-c)) for k, c in reversed(x.letters())])

    def group_commutator(self, x: CanonicalUnipotent, y: CanonicalUnipotent) -> CanonicalUnipotent:
        """x^-1 y^-1 x y."""
        return self.collect(self.invert(x).letters() + self.invert(y).letters()
                            + x.letters() + y.letters())

    def adjoint_image(self, x: CanonicalUnipotent | Sequence[Letter], rep):
        """Product of exp(t ad e_r) over the letters, via an ``AdjointRep``."""
        letters = x.letters() if isinstance(x, CanonicalUnipotent) else self._normalise(x)
        from .liealg import identity

        out = identity(rep.alg.dim, self.field)
        for k, t in letters:
            out = out @ rep.exp_ad(self.system.root(k), t, self.field)
        return out

    def root_of(self, k: int) -> Root:
        return self.system.root(k)
