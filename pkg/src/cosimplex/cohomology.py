"""Standard semi-cosimplicial cohomology for finite-dimensional module actions.

A module action is a braid action by invertible matrices on a fixed space V.
The level spaces V^n are the joint fixed subspaces of the generators with
index >= n+2, computed exactly as kernels of stacked matrices; the cofaces
are the ascending generator words expressed in the level bases, and the
differentials are their alternating sums. Cohomology is reported as a
dimension over the scalar field (over a field, ker/im is determined by
dimension).
"""

from __future__ import annotations

import dataclasses
import functools
from typing import Optional, Sequence

from . import linalg, reports
from .linalg import Matrix, from_columns, rank_kernel, solve_columns
from .reports import CheckReport
from .scalars import ONE, QQi, scalar


class BrokenComplexError(Exception):
    """Signals a negative cohomology dimension, i.e. dd != 0 somewhere."""


@dataclasses.dataclass(frozen=True)
class ModuleSco:
    """Per-level fixed subspaces of a matrix braid action, with coface matrices.

    Levels run from -1 (fixed by every generator) to n_max. Generators beyond
    the supplied list act as the identity.
    """

    gens: tuple[Matrix, ...]
    n_max: int

    @property
    def dim(self) -> int:
        return self.gens[0].rows

    def generator(self, k: int) -> Matrix:
        if k < 1:
            raise ValueError("generator indices start at 1")
        return self.gens[k - 1] if k <= len(self.gens) else Matrix.identity(self.dim)

    @functools.lru_cache(maxsize=None)
    def basis(self, n: int) -> Matrix:
        """Columns form a basis of V^n = joint fixed space of sigma_k, k >= n+2."""
        if n < -1:
            raise ValueError("levels start at -1")
        eye = Matrix.identity(self.dim)
        stacked: Optional[Matrix] = None
        for k in range(n + 2, len(self.gens) + 1):
            block = self.generator(k) - eye
            stacked = block if stacked is None else stacked.vstack(block)
        if stacked is None:
            return eye
        _, kernel = rank_kernel(stacked)
        return from_columns(kernel) if kernel else Matrix.zero(self.dim, 0)

    def word_matrix(self, k: int, n: int) -> Matrix:
        """The matrix of sigma_{k+1} ... sigma_{n+1} acting on V."""
        out = Matrix.identity(self.dim)
        for idx in range(k + 1, n + 2):
            out = out * self.generator(idx)
        return out

    @functools.lru_cache(maxsize=None)
    def coface_matrix(self, n: int, k: int) -> Matrix:
        """delta^k : V^{n-1} -> V^n expressed in the level bases."""
        if not 0 <= k <= n:
            raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
        if n > self.n_max:
            raise ValueError(f"level {n} beyond truncation bound {self.n_max}")
        src, dst = self.basis(n - 1), self.basis(n)
        if src.cols == 0:
            return Matrix.zero(dst.cols, 0)
        return solve_columns(dst, self.word_matrix(k, n) * src)


def module_sco(gens: Sequence[Matrix], n_max: int) -> ModuleSco:
    return ModuleSco(tuple(gens), n_max)


def differential(s: ModuleSco, n: int) -> Matrix:
    """d^n = sum over k of (-1)^k delta^k : V^{n-1} -> V^n."""
    if not 0 <= n <= s.n_max:
        raise ValueError(f"level {n} out of range")
    out = s.coface_matrix(n, 0)
    for k in range(1, n + 1):
        term = s.coface_matrix(n, k)
        out = out + term if k % 2 == 0 else out - term
    return out


@dataclasses.dataclass(frozen=True)
class CochainComplex:
    """Differentials d^n : V^{n-1} -> V^n for n in a truncation range."""

    diffs: tuple[Matrix, ...]  # diffs[n] is d^n

    @property
    def top(self) -> int:
        return len(self.diffs) - 1


def cochain_complex(s: ModuleSco) -> CochainComplex:
    return CochainComplex(tuple(differential(s, n) for n in range(s.n_max + 1)))


def verify_dd_zero(c: CochainComplex) -> CheckReport:
    if c.top < 1:
        raise ValueError("need at least two consecutive differentials")
    checked = 0
    for n in range(c.top):
        prod = c.diffs[n + 1] * c.diffs[n]
        checked += 1
        if not prod.is_zero():
            bad = next(
                (i, j)
                for i in range(prod.rows)
                for j in range(prod.cols)
                if prod[(i, j)]
            )
            return reports.failed(
                checked,
                "d d != 0",
                {"n": n, "entry": bad, "value": prod[bad]},
            )
    return reports.passed(checked)


def cohomology_dim(c: CochainComplex, n: int) -> int:
    """dim H^n = dim ker(d^{n+1}) - rank(d^n)."""
    if not 0 <= n <= c.top - 1:
        raise ValueError(f"need d^{n} and d^{n + 1} in range")
    _, kernel = rank_kernel(c.diffs[n + 1])
    dim_ker = len(kernel)
    rk = linalg.rank(c.diffs[n])
    out = dim_ker - rk
    if out < 0:
        raise BrokenComplexError(f"negative dimension at n={n}: dd != 0 upstream")
    return out


def h1_explicit(s: ModuleSco) -> int:
    """The direct description of H^1: solutions of (sigma_2 - sigma_1 sigma_2)x = x
    inside V^1, modulo coboundaries sigma_1 y - y from V^0."""
    if s.n_max < 2:
        raise ValueError("need levels up to 2")
    eye = Matrix.identity(s.dim)
    s1, s2 = s.generator(1), s.generator(2)
    p1, p0 = s.basis(1), s.basis(0)
    cond = (s2 - s1 * s2 - eye) * p1
    _, kernel = rank_kernel(cond)
    cobound = (s1 - eye) * p0
    return len(kernel) - linalg.rank(cobound)


def cohomology_table(s: ModuleSco) -> list[dict]:
    """The CLI table: per level, carrier dimension, rank, kernel, H dimension."""
    c = cochain_complex(s)
    rows = []
    for n in range(c.top):
        _, kernel = rank_kernel(c.diffs[n + 1])
        rows.append(
            {
                "n": n,
                "dim_V": s.basis(n).cols,
                "rank_d": linalg.rank(c.diffs[n]),
                "dim_ker_d_next": len(kernel),
                "dim_H": cohomology_dim(c, n),
            }
        )
    return rows
