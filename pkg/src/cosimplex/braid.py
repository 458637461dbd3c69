"""Braid words, braid-monoid actions, and the SCOs they induce.

An action provides apply(i, x) for the Artin generator with index i >= 1
(and optionally inverse_apply for group actions). Every action declares a
stabilization bound K (generators above K act as the identity on the
carrier) or an exact level function, so that the filtration level of an
element is finitely computable. Words are applied right-to-left, i.e.
(gh)x = g(hx).

The filtration X^n consists of the elements fixed by all generators with
index >= n+2; the cofaces are the ascending words sigma_{k+1} ... sigma_{n+1}.
"""

from __future__ import annotations

import dataclasses
import itertools
from typing import Any, Callable, Iterable, Optional, Sequence

from . import reports
from .reports import CheckReport
from .simplicial import Level, Sco, TruncationError, VerificationError, sco_verify


@dataclasses.dataclass(frozen=True)
class BraidWord:
    """A finite word in signed Artin generators; empty word is the unit."""

    letters: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        for idx, sign in self.letters:
            if idx < 1 or sign not in (1, -1):
                raise ValueError(f"bad letter ({idx}, {sign})")

    @staticmethod
    def positive(indices: Iterable[int]) -> BraidWord:
        return BraidWord(tuple((i, 1) for i in indices))

    @staticmethod
    def from_signed(ints: Iterable[int]) -> BraidWord:
        """Parse the CLI wire format, e.g. [1, 2, -1] for s1 s2 s1^-1."""
        return BraidWord(tuple((abs(i), 1 if i > 0 else -1) for i in ints))

    def to_signed(self) -> list[int]:
        return [idx * sign for idx, sign in self.letters]

    def is_positive(self) -> bool:
        return all(sign == 1 for _, sign in self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        return BraidWord(self.letters + other.letters)

    def inverse(self) -> BraidWord:
        return BraidWord(tuple((idx, -sign) for idx, sign in reversed(self.letters)))

    def __len__(self) -> int:
        return len(self.letters)


@dataclasses.dataclass(frozen=True)
class BraidAction:
    """An action of the braid monoid (or group) on a carrier with exact equality."""

    apply: Callable[[int, Any], Any]
    elements: tuple
    equal: Callable[[Any, Any], bool] = lambda x, y: x == y
    inverse_apply: Optional[Callable[[int, Any], Any]] = None
    stabilization_bound: Optional[int] = None
    exact_level: Optional[Callable[[Any], int]] = None
    exhaustive: bool = True
    name: str = ""

    def apply_word(self, word: BraidWord, x: Any) -> Any:
        for idx, sign in reversed(word.letters):
            if sign == 1:
                x = self.apply(idx, x)
            else:
                if self.inverse_apply is None:
                    raise ValueError("action has no inverses; word must be positive")
                x = self.inverse_apply(idx, x)
        return x


def coface_word(k: int, n: int) -> BraidWord:
    """The positive word sigma_{k+1} ... sigma_{n+1} implementing delta^k at level n."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    return BraidWord.positive(range(k + 1, n + 2))


def level_of(x: Any, a: BraidAction) -> int:
    """Minimal n >= -1 with sigma_k x = x for all k >= n+2.

    Certified through the declared stabilization bound (or exactly, when the
    action knows its levels)."""
    if a.exact_level is not None:
        return a.exact_level(x)
    if a.stabilization_bound is None:
        raise ValueError("action declares neither a stabilization bound nor exact levels")
    for k in range(a.stabilization_bound, 0, -1):
        if not a.equal(a.apply(k, x), x):
            return k - 1
    return -1


def verify_braid_relations(a: BraidAction, index_cap: Optional[int] = None) -> CheckReport:
    """Check (B1) and (B2) for generator indices up to the stabilization bound."""
    cap = index_cap
    if cap is None:
        cap = a.stabilization_bound
    if cap is None:
        raise ValueError("no index cap available for relation checking")
    checked = 0
    mode = "exhaustive" if a.exhaustive else "sampled"
    for i, j in itertools.combinations(range(1, cap + 1), 2):
        for x in a.elements:
            if j - i == 1:
                lhs = a.apply(i, a.apply(j, a.apply(i, x)))
                rhs = a.apply(j, a.apply(i, a.apply(j, x)))
                label = "B1"
            else:
                lhs = a.apply(i, a.apply(j, x))
                rhs = a.apply(j, a.apply(i, x))
                label = "B2"
            checked += 1
            if not a.equal(lhs, rhs):
                return reports.failed(
                    checked, f"braid relation {label} violated",
                    {"i": i, "j": j, "element": x}, mode,
                )
    return reports.passed(checked, mode)


class ClosureError(Exception):
    def __init__(self, k: int, n: int, x: Any, image_level: int):
        super().__init__(
            f"delta^{k} at level {n} sent an element to level {image_level}: {x!r}"
        )
        self.witness = (k, n, x, image_level)


def braid_sco_build(
    a: BraidAction,
    n_max: int,
    restrict: Optional[Sequence[tuple]] = None,
    verify: bool = True,
) -> Sco:
    """The augmented SCO with carriers X^n and cofaces the ascending words.

    `restrict` optionally replaces the carriers by per-level subsets (indexed
    0..n_max); closure of the cofaces on the subsets is then checked.
    """
    if verify:
        rep = verify_braid_relations(a)
        if not rep.passed:
            raise VerificationError(rep)

    if restrict is not None:
        if len(restrict) != n_max + 1:
            raise ValueError("restrict must provide one carrier per level 0..n_max")
        carriers = [tuple(xs) for xs in restrict]
        augmentation = None
    else:
        by_level = [(x, level_of(x, a)) for x in a.elements]
        carriers = [
            tuple(x for x, lv in by_level if lv <= n) for n in range(n_max + 1)
        ]
        augmentation = Level(
            tuple(x for x, lv in by_level if lv <= -1), a.exhaustive
        )

    sco = Sco(
        levels=tuple(Level(c, a.exhaustive) for c in carriers),
        coface=lambda n, k, x: a.apply_word(coface_word(k, n), x),
        equal=a.equal,
        augmentation=augmentation,
    )

    if verify:
        # coface images must stay within the target level's fixed-point set;
        # a violation means the supplied maps are not a braid action
        for n in range(1, n_max + 1):
            for x in sco.levels[n - 1].elements:
                for k in range(n + 1):
                    img = sco.delta(n, k, x)
                    if restrict is not None:
                        if not any(a.equal(img, y) for y in carriers[n]):
                            raise ClosureError(k, n, x, -2)
                    else:
                        lv = level_of(img, a)
                        if lv > n:
                            raise ClosureError(k, n, x, lv)
        rep = sco_verify(sco)
        if not rep.passed:
            raise VerificationError(rep)
    return sco


def lemma_power_check(a: BraidAction, x: Any, n: int, big_n: int) -> bool:
    """Compare the N-fold canonical shift alpha_n with the single descending
    word sigma_{n+N} ... sigma_{n+1} on an element of level <= n."""
    if big_n < 1:
        raise ValueError("power must be >= 1")
    if level_of(x, a) > n:
        raise ValueError("element level exceeds n")
    lhs = x
    for t in range(big_n):
        # alpha_n^{(level+1)} with current level n+t is delta^n, the ascending word
        lhs = a.apply_word(coface_word(n, n + t + 1), lhs)
    rhs = a.apply_word(
        BraidWord.positive(range(n + big_n, n, -1)), x
    )
    return a.equal(lhs, rhs)


def diagram_identity_check(a: BraidAction, i: int, j: int, n: int, x: Any) -> bool:
    """The diagrammatic braid equality behind the cosimplicial identities,
    evaluated on an element of level <= n-1."""
    if not 0 <= i < j <= n:
        raise ValueError(f"need 0 <= i < j <= n, got i={i}, j={j}, n={n}")
    lhs_word = (
        BraidWord.positive(range(j + 1, n + 2))
        * BraidWord.positive(range(i + 1, n + 2))
        * BraidWord.positive([n + 1])
    )
    rhs_word = BraidWord.positive(range(i + 1, n + 2)) * BraidWord.positive(
        range(j, n + 2)
    )
    return a.equal(a.apply_word(lhs_word, x), a.apply_word(rhs_word, x))


# ---------------------------------------------------------------------------
# Set-theoretic Yang-Baxter solutions
# ---------------------------------------------------------------------------

def ybe_check(r: Callable[[Any, Any], tuple], y_set: Sequence) -> bool:
    """Exhaustively test r12 r23 r12 = r23 r12 r23 on Y x Y x Y."""

    def r12(t):
        a, b = r(t[0], t[1])
        return (a, b, t[2])

    def r23(t):
        b, c = r(t[1], t[2])
        return (t[0], b, c)

    for t in itertools.product(y_set, repeat=3):
        if r12(r23(r12(t))) != r23(r12(r23(t))):
            return False
    return True


def ybe_action(
    r: Callable[[Any, Any], tuple], y_set: Sequence, strands: int
) -> BraidAction:
    """The action on Y^strands where sigma_k applies r to coordinates k-1, k.

    Generators with index >= strands act as the identity, so the declared
    stabilization bound is strands - 1; the construction is sound for SCO
    levels n_max <= strands - 2.
    """
    if not ybe_check(r, y_set):
        raise ValueError("r is not a set-theoretic Yang-Baxter solution")

    def apply(i: int, x: tuple) -> tuple:
        if i >= len(x):
            return x
        a, b = r(x[i - 1], x[i])
        return x[: i - 1] + (a, b) + x[i + 1:]

    elements = tuple(itertools.product(y_set, repeat=strands))
    return BraidAction(
        apply=apply,
        elements=elements,
        stabilization_bound=strands - 1,
        name=f"ybe-{strands}",
    )


# ---------------------------------------------------------------------------
# The flip action on eventually constant sequences
# ---------------------------------------------------------------------------

def _canonical(seq: tuple) -> tuple:
    out = list(seq)
    while len(out) >= 2 and out[-1] == out[-2]:
        out.pop()
    return tuple(out)


def flip_action(y_set: Sequence, support: int) -> BraidAction:
    """sigma_i swaps positions i-1 and i of an eventually constant sequence.

    Sequences are canonical tuples whose last entry repeats forever; the level
    of an element is exactly its canonical length minus 2 (-1 for constants).
    Test elements enumerate all canonical tuples of length <= support + 1.
    """

    def apply(i: int, x: tuple) -> tuple:
        # keep one explicit entry beyond the swap so the repeating tail survives
        ext = x + (x[-1],) * (max(len(x), i + 1) + 1 - len(x))
        swapped = ext[: i - 1] + (ext[i], ext[i - 1]) + ext[i + 1:]
        return _canonical(swapped)

    def exact_level(x: tuple) -> int:
        return len(x) - 2 if len(x) >= 2 else -1

    elements = tuple(
        sorted(
            {
                _canonical(t)
                for length in range(1, support + 2)
                for t in itertools.product(y_set, repeat=length)
            }
        )
    )
    return BraidAction(
        apply=apply,
        elements=elements,
        inverse_apply=apply,  # each generator is an involution
        stabilization_bound=support + 2,
        exact_level=exact_level,
        name="flip",
    )
