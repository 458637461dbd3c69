"""Semi-cosimplicial objects, partial shifts, and the correspondence between them.

An Sco is a finite truncation: per-level test carriers plus coface morphisms
delta^k : F^{n-1} -> F^n, with the identities delta^j delta^i = delta^i delta^{j-1}
(i < j) checked pointwise, never assumed. A PartialShiftSystem is a filtration
with connecting maps i_n and level restrictions alpha_k^{(n)} of adapted
endomorphisms; the inductive limit is realized as a tagged union of levels,
elements compared by pushing forward along the connecting maps (all examples
here have injective connecting maps, so this is a faithful model).

Carriers are either finite bases (exhaustive checking) or sampled element
lists; every report records which mode was used.
"""

from __future__ import annotations

import dataclasses
import itertools
from typing import Any, Callable, NamedTuple, Optional, Sequence

from . import reports
from .reports import CheckReport


class TruncationError(Exception):
    """A computation would need a level beyond the system's truncation bound."""


class ExchangeLawError(Exception):
    def __init__(self, i: int, j: int, x: Any):
        super().__init__(f"exchange law fails at i={i}, j={j}, x={x!r}")
        self.witness = (i, j, x)


class InjectivityError(Exception):
    def __init__(self, level: int, x: Any, y: Any):
        super().__init__(f"colimit injection at level {level} collides: {x!r}, {y!r}")
        self.witness = (level, x, y)


class VerificationError(Exception):
    def __init__(self, report: CheckReport):
        super().__init__(f"verification failed: {report.to_json()}")
        self.report = report


# ---------------------------------------------------------------------------
# Ordinal face maps and the basic shift on the natural numbers
# ---------------------------------------------------------------------------

@dataclasses.dataclass(frozen=True)
class FaceMap:
    """The strictly increasing map [n-1] -> [n] whose image omits k."""

    k: int
    n: int

    def __post_init__(self) -> None:
        if not 0 <= self.k <= self.n:
            raise ValueError(f"need 0 <= k <= n, got k={self.k}, n={self.n}")

    def __call__(self, m: int) -> int:
        if not 0 <= m <= self.n - 1:
            raise ValueError(f"m={m} outside domain [{self.n - 1}]")
        return m if m < self.k else m + 1


def nat_partial_shift(k: int, m: int) -> int:
    """The injection of N0 into itself missing the position k."""
    return m if m < k else m + 1


# ---------------------------------------------------------------------------
# SCO truncations
# ---------------------------------------------------------------------------

@dataclasses.dataclass(frozen=True)
class Level:
    """Test elements for one level: a full basis, or a sampled list."""

    elements: tuple
    exhaustive: bool = True


@dataclasses.dataclass(frozen=True)
class Sco:
    """A truncated semi-cosimplicial object.

    coface(n, k, x) applies delta^k : F^{n-1} -> F^n; for an augmented SCO the
    call coface(0, 0, x) is the augmentation map F^{-1} -> F^0.
    """

    levels: tuple[Level, ...]
    coface: Callable[[int, int, Any], Any]
    equal: Callable[[Any, Any], bool] = lambda x, y: x == y
    augmentation: Optional[Level] = None

    @property
    def n_max(self) -> int:
        return len(self.levels) - 1

    def level(self, n: int) -> Optional[Level]:
        if n == -1:
            return self.augmentation
        return self.levels[n]

    def delta(self, n: int, k: int, x: Any) -> Any:
        if not 0 <= k <= n:
            raise ValueError(f"delta^{k} undefined at level transition {n-1}->{n}")
        if n > self.n_max:
            raise TruncationError(f"level {n} beyond truncation bound {self.n_max}")
        return self.coface(n, k, x)


def sco_verify(s: Sco, n_max: Optional[int] = None) -> CheckReport:
    """Check delta^j delta^i = delta^i delta^{j-1} on all test elements.

    Sources run over levels n-1 (including the augmentation when present) with
    headroom for a double application within the truncation.
    """
    bound = s.n_max if n_max is None else min(n_max, s.n_max)
    checked = 0
    mode = "exhaustive"
    start = -1 if s.augmentation is not None else 0
    for src in range(start, bound - 1):
        n = src + 1
        lvl = s.level(src)
        if lvl is None or not lvl.elements:
            continue
        if not lvl.exhaustive:
            mode = "sampled"
        for x in lvl.elements:
            for i, j in itertools.combinations(range(n + 2), 2):
                if i > n or j - 1 > n:
                    continue
                lhs = s.delta(n + 1, j, s.delta(n, i, x))
                rhs = s.delta(n + 1, i, s.delta(n, j - 1, x))
                checked += 1
                if not s.equal(lhs, rhs):
                    return reports.failed(
                        checked,
                        "cosimplicial identity violated",
                        {"i": i, "j": j, "n": n, "element": x},
                        mode,
                    )
    return reports.passed(checked, mode)


# ---------------------------------------------------------------------------
# Partial shift systems on the tagged-union colimit
# ---------------------------------------------------------------------------

class Colim(NamedTuple):
    """An inductive-limit element, tagged by the level of its representative."""

    level: int
    value: Any


@dataclasses.dataclass(frozen=True)
class PartialShiftSystem:
    """A filtration with connecting maps and adapted-endomorphism restrictions.

    connect(n, x) is i_n : F_{n-1} -> F_n (1 <= n <= n_max);
    alpha(k, n, x) is alpha_k^{(n)} : F_{n-1} -> F_n. k_max bounds the shift
    indices available (None = all k).
    """

    levels: tuple[Level, ...]
    connect: Callable[[int, Any], Any]
    alpha: Callable[[int, int, Any], Any]
    equal: Callable[[Any, Any], bool] = lambda x, y: x == y
    k_max: Optional[int] = None

    @property
    def n_max(self) -> int:
        return len(self.levels) - 1

    def mu(self, n: int, x: Any) -> Colim:
        return Colim(n, x)

    def push(self, c: Colim, target: int) -> Colim:
        if target > self.n_max:
            raise TruncationError(f"level {target} beyond truncation {self.n_max}")
        v = c.value
        for n in range(c.level + 1, target + 1):
            v = self.connect(n, v)
        return Colim(target, v)

    def colim_equal(self, a: Colim, b: Colim) -> bool:
        t = max(a.level, b.level)
        return self.equal(self.push(a, t).value, self.push(b, t).value)

    def apply_shift(self, k: int, c: Colim) -> Colim:
        """Apply the adapted endomorphism alpha_k to a colimit element."""
        if self.k_max is not None and k > self.k_max:
            raise TruncationError(f"shift index {k} beyond bound {self.k_max}")
        n = c.level + 1
        if n > self.n_max:
            raise TruncationError(f"level {n} beyond truncation {self.n_max}")
        return Colim(n, self.alpha(k, n, c.value))

    def shift_indices(self, cap: int) -> range:
        top = cap if self.k_max is None else min(cap, self.k_max)
        return range(top + 1)


def verify_partial_shifts(p: PartialShiftSystem, k_cap: Optional[int] = None) -> CheckReport:
    """Check adaptedness, triviality below the index, and the exchange law."""
    cap = p.n_max + 1 if k_cap is None else k_cap
    ks = p.shift_indices(cap)
    checked = 0
    mode = "exhaustive" if all(l.exhaustive for l in p.levels) else "sampled"

    # adaptedness: mu_{n+1} alpha^{(n+1)} i_n = mu_n alpha^{(n)}
    for n in range(1, p.n_max):
        for k in ks:
            for x in p.levels[n - 1].elements:
                lhs = Colim(n + 1, p.alpha(k, n + 1, p.connect(n, x)))
                rhs = Colim(n, p.alpha(k, n, x))
                checked += 1
                if not p.colim_equal(lhs, rhs):
                    return reports.failed(
                        checked, "adaptedness violated", {"k": k, "n": n, "element": x}, mode
                    )

    # triviality: alpha_k mu_{k-1} = mu_{k-1}
    for k in ks:
        if k == 0 or k - 1 > p.n_max or k > p.n_max:
            continue
        for x in p.levels[k - 1].elements:
            lhs = Colim(k, p.alpha(k, k, x))
            checked += 1
            if not p.colim_equal(lhs, Colim(k - 1, x)):
                return reports.failed(
                    checked, "triviality violated", {"k": k, "element": x}, mode
                )

    # exchange law: alpha_j alpha_i = alpha_i alpha_{j-1}
    for i, j in itertools.combinations(ks, 2):
        for n in range(1, p.n_max):
            for x in p.levels[n - 1].elements:
                lhs = p.alpha(j, n + 1, p.alpha(i, n, x))
                rhs = p.alpha(i, n + 1, p.alpha(j - 1, n, x))
                checked += 1
                if not p.equal(lhs, rhs):
                    return reports.failed(
                        checked,
                        "exchange law violated",
                        {"i": i, "j": j, "n": n, "element": x},
                        mode,
                    )
    return reports.passed(checked, mode)


def shifts_from_sco(s: Sco, verify: bool = True) -> PartialShiftSystem:
    """The canonically associated system: alpha_k^{(n)} is delta^k for k <= n,
    delta^n beyond, and the connecting maps are i_n = delta^n."""
    if verify:
        rep = sco_verify(s)
        if not rep.passed:
            raise VerificationError(rep)
    return PartialShiftSystem(
        levels=s.levels,
        connect=lambda n, x: s.coface(n, n, x),
        alpha=lambda k, n, x: s.coface(n, min(k, n), x),
        equal=s.equal,
    )


def sco_from_shifts(p: PartialShiftSystem, verify: bool = True) -> Sco:
    """Read the cofaces off a partial shift system (the monic direction).

    Injectivity of the colimit injections is checked on the test elements
    only; this is a partial guarantee, recorded by the caller's reports.
    """
    top = p.n_max
    for n, lvl in enumerate(p.levels):
        for x, y in itertools.combinations(lvl.elements, 2):
            if p.equal(x, y):
                continue
            # push to the deepest truncated level: a collision anywhere
            # downstream already falsifies injectivity into the colimit
            if p.equal(p.push(Colim(n, x), top).value, p.push(Colim(n, y), top).value):
                raise InjectivityError(n, x, y)
    s = Sco(levels=p.levels, coface=lambda n, k, x: p.alpha(k, n, x), equal=p.equal)
    if verify:
        rep = sco_verify(s)
        if not rep.passed:
            raise VerificationError(rep)
    return s


def prop_partial_check(p: PartialShiftSystem, k: int, n_power: int, x: Any) -> bool:
    """Check alpha_k (alpha_0)^N mu_0 = (alpha_0)^N mu_0 (N < k) respectively
    (alpha_0)^{N+1} mu_0 (N >= k) at a single level-0 element."""
    c = p.mu(0, x)
    for _ in range(n_power):
        c = p.apply_shift(0, c)
    lhs = p.apply_shift(k, c)
    rhs = c if n_power < k else p.apply_shift(0, c)
    return p.colim_equal(lhs, rhs)


def relabel(p: PartialShiftSystem, offset: int) -> PartialShiftSystem:
    """The system (alpha_k)_{k >= offset} relabeled by k -> k - offset, with the
    filtration shifted accordingly."""
    if offset < 0 or offset > p.n_max:
        raise ValueError("offset outside filtration range")
    return PartialShiftSystem(
        levels=p.levels[offset:],
        connect=lambda n, x: p.connect(n + offset, x),
        alpha=lambda k, n, x: p.alpha(k + offset, n + offset, x),
        equal=p.equal,
        k_max=None if p.k_max is None else p.k_max - offset,
    )


def fixed_point_filtration(
    maps: Sequence[Callable[[Any], Any]],
    carrier: Sequence,
    equal: Callable[[Any, Any], bool] = lambda x, y: x == y,
) -> PartialShiftSystem:
    """Canonical filtration by fixed point sets X_n = {x : alpha_{n+1} x = x}.

    The exchange law is verified on the whole carrier first; elements outside
    the top fixed-point set (i.e. outside the truncated union of the X_n) are
    reported, mirroring the replacement of X by X_infinity.
    """
    top = len(maps) - 1  # largest available shift index
    if top < 1:
        raise ValueError("need at least alpha_0 and alpha_1")
    for i, j in itertools.combinations(range(top + 1), 2):
        for x in carrier:
            if not equal(maps[j](maps[i](x)), maps[i](maps[j - 1](x))):
                raise ExchangeLawError(i, j, x)

    fixed = [
        tuple(x for x in carrier if equal(maps[n + 1](x), x)) for n in range(top)
    ]
    for n in range(1, top):
        for x in fixed[n - 1]:
            if not any(equal(x, y) for y in fixed[n]):
                # ruled out by the exchange law already verified above
                raise AssertionError(f"fixed-point containment fails at level {n}: {x!r}")
    outside = [x for x in carrier if not any(equal(x, y) for y in fixed[-1])]
    if outside:
        raise TruncationError(
            f"elements outside the truncated union of fixed-point sets: {outside!r}"
        )
    return PartialShiftSystem(
        levels=tuple(Level(elems) for elems in fixed),
        connect=lambda n, x: x,
        alpha=lambda k, n, x: maps[k](x),
        equal=equal,
        k_max=top,
    )
