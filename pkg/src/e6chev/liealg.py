"""The 78-dimensional Chevalley-basis Lie algebra of type E6.

Used as an independent oracle: the Jacobi identity tests a numeric constant
table globally, and the adjoint matrices exp(t ad e_r) realise the root
elements x_r(t) so group-level formulas can be checked by matrix algebra.

Cartan-part conventions (standard Chevalley basis, all roots of length 2):

    [h_i, e_r] = (r, alpha_i) e_r
    [e_r, e_-r] = h_r = sum_i r_i h_i
"""

from __future__ import annotations

import itertools
import math
from collections import defaultdict
from dataclasses import dataclass, field

import numpy as np

from .constants import ConstantTable
from .fields import QQ, Rationals
from .rootsys import Root, RootSystem, add_vectors, neg, simple_root, FUNDAMENTAL

RANK = 6


class MissingEntryError(ValueError):
    pass


class UnsupportedFieldError(ValueError):
    pass


@dataclass(frozen=True)
class ChevalleyAlgebra:
    system: RootSystem
    labels: tuple[str, ...]
    brackets: tuple[tuple[dict[int, int], ...], ...] = field(repr=False)

    @property
    def dim(self) -> int:
        return len(self.labels)

    def basis_index(self, x) -> int:
        """Index of ``h<i>`` (i = 1..6) or of e_r for a root r."""
        if isinstance(x, str):
            return self.labels.index(x)
        k = self.system.index(x)
        return RANK + (k - 1 if k > 0 else 36 - k - 1)

    def bracket(self, i: int, j: int) -> dict[int, int]:
        return self.brackets[i][j]

    def bracket_vec(self, x: dict[int, int], y: dict[int, int]) -> dict[int, int]:
        out: dict[int, int] = defaultdict(int)
        for i, a in x.items():
            for j, b in y.items():
                for k, c in self.brackets[i][j].items():
                    out[k] += a * b * c
        return {k: v for k, v in out.items() if v}

    def ad(self, i: int) -> np.ndarray:
        """Integer matrix of ad(basis_i); column k holds [basis_i, basis_k]."""
        mat = np.zeros((self.dim, self.dim), dtype=np.int64)
        for k in range(self.dim):
            for m, c in self.brackets[i][k].items():
                mat[m, k] = c
        return mat


def _basis_roots(system: RootSystem) -> list[Root]:
    return list(system.positives) + [neg(r) for r in system.positives]


def build_algebra(table: ConstantTable) -> ChevalleyAlgebra:
    if table.mode != "numeric":
        raise ValueError("build_algebra needs a numeric table")
    system = table.system
    roots = _basis_roots(system)
    labels = tuple(f"h{i}" for i in range(1, RANK + 1)) + tuple(f"e{system.index(r)}" for r in roots)
    dim = len(labels)
    pos = {r: RANK + k for k, r in enumerate(roots)}
    simple = [simple_root(x) for x in FUNDAMENTAL]
    br: list[list[dict[int, int]]] = [[{} for _ in range(dim)] for _ in range(dim)]
    for r in roots:
        k = pos[r]
        for i, alpha in enumerate(simple):
            c = system.scalar_product(r, alpha)
            if c:
                br[i][k] = {k: c}
                br[k][i] = {k: -c}
        br[k][pos[neg(r)]] = {i: x for i, x in enumerate(r) if x}
        for s in roots:
            t = add_vectors(r, s)
            if t in system:
                n = table.n(r, s)
                if n is None:
                    raise MissingEntryError(f"no constant for ({r}, {s})")
                br[k][pos[s]] = {pos[t]: int(n)}
    return ChevalleyAlgebra(system, labels, tuple(tuple(row) for row in br))


@dataclass
class JacobiReport:
    checked: int = 0
    violations: list[tuple[str, str, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def jacobi_scan(alg: ChevalleyAlgebra, basis: list[int] | None = None) -> JacobiReport:
    """Check [x,[y,z]] + [y,[z,x]] + [z,[x,y]] = 0 on basis triples (with repeats)."""
    br = alg.brackets
    idx = range(alg.dim) if basis is None else basis

    def nested(x, y, z, acc):
        for k, c in br[y][z].items():
            for m, d in br[x][k].items():
                acc[m] += c * d

    rep = JacobiReport()
    for x, y, z in itertools.combinations_with_replacement(idx, 3):
        acc: dict[int, int] = defaultdict(int)
        nested(x, y, z, acc)
        nested(y, z, x, acc)
        nested(z, x, y, acc)
        rep.checked += 1
        if any(acc.values()):
            rep.violations.append((alg.labels[x], alg.labels[y], alg.labels[z]))
    return rep


@dataclass(frozen=True)
class AdjointMatrix:
    """A square matrix over QQ (object array of Fractions) or GF(p) (int64 array)."""

    data: np.ndarray
    field: object

    def __matmul__(self, other: AdjointMatrix) -> AdjointMatrix:
        if self.field != other.field:
            raise ValueError("field mismatch")
        prod = self.data @ other.data
        if not isinstance(self.field, Rationals):
            prod %= self.field.p
        return AdjointMatrix(prod, self.field)

    def __eq__(self, other):
        return (isinstance(other, AdjointMatrix) and self.field == other.field
                and np.array_equal(self.data, other.data))

    def __hash__(self):
        return id(self)

    def is_identity(self) -> bool:
        return np.array_equal(self.data, np.eye(len(self.data), dtype=np.int64))


def identity(n: int, fld=QQ) -> AdjointMatrix:
    if isinstance(fld, Rationals):
        return AdjointMatrix(np.eye(n, dtype=np.int64).astype(object), fld)
    return AdjointMatrix(np.eye(n, dtype=np.int64), fld)


class AdjointRep:
    """Caches ad(e_r) and builds exp(t ad e_r) over a chosen field."""

    def __init__(self, alg: ChevalleyAlgebra):
        self.alg = alg
        self._ad: dict[Root, np.ndarray] = {}
        self._powers: dict[Root, list[np.ndarray]] = {}

    def ad_root(self, r: Root) -> np.ndarray:
        r = tuple(r)
        if r not in self._ad:
            self._ad[r] = self.alg.ad(self.alg.basis_index(r))
        return self._ad[r]

    def ad_powers(self, r: Root) -> list[np.ndarray]:
        r = tuple(r)
        if r not in self._powers:
            a = self.ad_root(r)
            pw = [np.eye(self.alg.dim, dtype=np.int64), a]
            for _ in range(3):
                pw.append(pw[-1] @ a)
            self._powers[r] = pw
        return self._powers[r]

    def exp_ad(self, r: Root, t, fld=QQ) -> AdjointMatrix:
        """sum_{k=0..4} t^k ad(e_r)^k / k!, the image of x_r(t)."""
        p = fld.characteristic
        if p and p <= 5:
            raise UnsupportedFieldError(f"characteristic {p} cannot invert 4!")
        pw = self.ad_powers(r)
        t = fld(t)
        if isinstance(fld, Rationals):
            out = np.zeros((self.alg.dim, self.alg.dim), dtype=object)
            out[...] = 0
            for k in range(5):
                coeff = t ** k / math.factorial(k)
                if coeff:
                    out = out + pw[k].astype(object) * coeff
            return AdjointMatrix(out, fld)
        out = np.zeros((self.alg.dim, self.alg.dim), dtype=np.int64)
        for k in range(5):
            coeff = pow(t, k, p) * pow(math.factorial(k), -1, p) % p
            out = (out + (pw[k] % p) * coeff) % p
        return AdjointMatrix(out, fld)


def exp_ad(alg: ChevalleyAlgebra, r: Root, t, fld=QQ) -> AdjointMatrix:
    return AdjointRep(alg).exp_ad(r, t, fld)


def group_commutator(a: AdjointMatrix, a_inv: AdjointMatrix,
                     b: AdjointMatrix, b_inv: AdjointMatrix) -> AdjointMatrix:
    """a^-1 b^-1 a b, with the inverses supplied by the caller."""
    return a_inv @ b_inv @ a @ b


@dataclass
class CrosscheckReport:
    samples: int = 0
    failures: list[tuple] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def commutator_crosscheck(table: ConstantTable, fld, samples: int, rng,
                          alg: ChevalleyAlgebra | None = None) -> CrosscheckReport:
    """Check x_s(u)^-1 x_r(t)^-1 x_s(u) x_r(t) = x_{r+s}(N_{s,r} t u) on random data.

    Roots s, r range over all of Phi with r + s a root; u, t are nonzero in ``fld``.
    """
    system = table.system
    rep_ = AdjointRep(alg or build_algebra(table))
    pairs = [(s, r) for s in system.roots for r in system.roots if add_vectors(s, r) in system]
    p = fld.characteristic
    out = CrosscheckReport()
    for _ in range(samples):
        s, r = rng.choice(pairs)
        u, t = (fld(rng.randrange(1, p)) if p else fld(rng.randint(-9, 9) or 1) for _ in range(2))
        xs, xs_inv = rep_.exp_ad(s, u, fld), rep_.exp_ad(s, -u, fld)
        xr, xr_inv = rep_.exp_ad(r, t, fld), rep_.exp_ad(r, -t, fld)
        lhs = group_commutator(xs, xs_inv, xr, xr_inv)
        rhs = rep_.exp_ad(add_vectors(r, s), fld(int(table.n(s, r)) * t * u), fld)
        out.samples += 1
        if lhs != rhs:
            out.failures.append((s, r, u, t))
    return out
