"""Moment-level noncommutative probability: distributions, spreadability,
and the moment-word cofaces.

A moment word is a finite sequence of (position, letter, star) factors; a
distribution is an oracle taking moment words to exact scalars, with the
empty word evaluating to one. Spreadability is checked against all
elementary increasing reindexings (skip one position); every strictly
increasing map on a finite range is a composition of these, mirroring the
generation of strictly increasing maps by the face maps. Reports always
record the quantifier bounds actually checked.
"""

from __future__ import annotations

import dataclasses
import itertools
from typing import Any, Callable, NamedTuple, Optional, Sequence

from . import reports
from .reports import CheckReport
from .scalars import ONE, ZERO, QQi, scalar
from .simplicial import Level, Sco, nat_partial_shift, shifts_from_sco


class Factor(NamedTuple):
    pos: int
    letter: Any
    star: bool = False


MomentWord = tuple  # tuple[Factor, ...]


class StarPositivityError(Exception):
    def __init__(self, word: MomentWord, value: QQi):
        super().__init__(f"phi(w* w) = {value!r} is not a nonnegative real for w = {word!r}")
        self.witness = (word, value)


@dataclasses.dataclass(frozen=True)
class Distribution:
    """An oracle from moment words to exact scalars; eval(()) must be 1."""

    alphabet: tuple
    eval_word: Callable[[MomentWord], QQi]
    star_mode: bool = False
    star_letter: Optional[Callable[[Any], Any]] = None
    name: str = ""


def table_distribution(
    table: dict, alphabet: tuple, default: QQi = ZERO, name: str = "table"
) -> Distribution:
    """A finite moment table (used for counterexamples); missing words get the
    default value and the empty word always evaluates to 1."""

    def eval_word(w: MomentWord) -> QQi:
        if not w:
            return ONE
        return table.get(tuple(w), default)

    return Distribution(alphabet=alphabet, eval_word=eval_word, name=name)


def reindex_word(w: MomentWord, index_map: Callable[[int], int]) -> MomentWord:
    return tuple(Factor(index_map(f.pos), f.letter, f.star) for f in w)


def enumerate_words(
    alphabet: Sequence, degree: int, pos_bound: int, star: bool
):
    """All nonempty moment words of length <= degree with positions <= pos_bound."""
    stars = (False, True) if star else (False,)
    factors = [
        Factor(p, b, s)
        for p in range(pos_bound + 1)
        for b in alphabet
        for s in stars
    ]
    for length in range(1, degree + 1):
        yield from itertools.product(factors, repeat=length)


def spreadability_check(
    d: Distribution, degree: int, pos_bound: int, star: bool = False
) -> CheckReport:
    """Compare eval(w) with eval(i.w) for every elementary increasing
    reindexing i = skip-position-k, k <= pos_bound."""
    if degree < 1 or pos_bound < 1:
        raise ValueError("degree and pos_bound must be >= 1")
    if star and not d.star_mode:
        raise ValueError("distribution does not support *-moments")
    notes = (
        f"bounds: degree<={degree}, positions<={pos_bound}, star={star}",
        "reindexings reduced to elementary skips (these generate all strictly increasing maps)",
    )
    cache: dict = {}

    def ev(w: MomentWord) -> QQi:
        if w not in cache:
            cache[w] = d.eval_word(w)
        return cache[w]

    checked = 0
    for w in enumerate_words(d.alphabet, degree, pos_bound, star):
        base = ev(w)
        for k in range(pos_bound + 1):
            shifted = reindex_word(w, lambda p: nat_partial_shift(k, p))
            checked += 1
            val = ev(shifted)
            if val != base:
                return CheckReport(
                    "fail",
                    checked,
                    "exhaustive",
                    reports.Witness(
                        "moment changes under subsequence reindexing",
                        {
                            "word": w,
                            "reindexing": f"skip position {k}",
                            "lhs": base,
                            "rhs": val,
                        },
                    ),
                    notes,
                )
    return reports.passed(checked, notes=notes)


def free_coface(k: int, n: int, w: MomentWord) -> MomentWord:
    """delta^k on moment words: shift positions >= k up by one."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    for f in w:
        if f.pos > n - 1:
            raise ValueError(f"position {f.pos} exceeds level {n - 1}")
    return reindex_word(w, lambda p: nat_partial_shift(k, p))


def subsequence_witness(
    index_map: Callable[[int], int], positions: Sequence[int]
) -> list[tuple[int, int]]:
    """The composition of partial-shift powers realizing a strictly increasing
    reindexing on the given (sorted, distinct) positions.

    Returns [(M_1, p_1), ..., (M_R, p_R)]; applying alpha_{M_R}^{p_R} after
    ... after alpha_{M_1}^{p_1} maps each position N_r to index_map(N_r).

    The map must extend to a strictly increasing map on all of the naturals
    (gaps between consecutive positions may not shrink); this is automatic
    for subsequence selections and is necessary, because any composition of
    partial shifts displaces later positions at least as far as earlier
    ones."""
    ns = list(positions)
    if ns != sorted(set(ns)):
        raise ValueError("positions must be sorted and distinct")
    imgs = [index_map(n) for n in ns]
    if any(i < n for n, i in zip(ns, imgs)):
        raise ValueError("index map is not strictly increasing on the positions")
    if any(
        i2 - i1 < n2 - n1
        for (n1, i1), (n2, i2) in zip(zip(ns, imgs), zip(ns[1:], imgs[1:]))
    ):
        raise ValueError(
            "index map does not extend to a strictly increasing map of the "
            "naturals: a gap between consecutive positions shrinks"
        )
    out: list[tuple[int, int]] = []
    for r, n_r in enumerate(ns):
        m_r = n_r if r == 0 else n_r + (imgs[r - 1] - ns[r - 1])
        power = imgs[r] - m_r
        if not n_r <= m_r <= imgs[r]:
            raise AssertionError("witness index out of the guaranteed range")
        out.append((m_r, power))

    # sanity: the composed natural shifts must reproduce the map pointwise
    for n_r, target in zip(ns, imgs):
        v = n_r
        for m_r, power in out:
            for _ in range(power):
                v = nat_partial_shift(m_r, v)
        if v != target:
            raise AssertionError(f"witness composition fails at {n_r}: {v} != {target}")
    return out


def star_word(w: MomentWord) -> MomentWord:
    """The adjoint word: reversed order, stars toggled."""
    return tuple(Factor(f.pos, f.letter, not f.star) for f in reversed(w))


def star_positivity_check(d: Distribution, words: Sequence[MomentWord]) -> CheckReport:
    """Spot-check phi(w* w) >= 0 (real) on the given sample of words."""
    if not d.star_mode:
        raise ValueError("distribution does not support *-moments")
    checked = 0
    for w in words:
        val = d.eval_word(star_word(w) + tuple(w))
        checked += 1
        if val.im != 0 or val.re < 0:
            return reports.failed(
                checked, "phi(w* w) is not a nonnegative real", {"word": w, "value": val}
            )
    return reports.passed(checked, mode="sampled")


def star_spreadability_mode(
    d: Distribution, sample_words: Optional[Sequence[MomentWord]] = None
) -> Distribution:
    """Return d ready for *-spreadability checking, after positivity spot-checks."""
    if not d.star_mode:
        raise ValueError("distribution does not support *-moments")
    if sample_words is None:
        sample_words = [w for w in enumerate_words(d.alphabet, 2, 2, True)][:64]
    rep = star_positivity_check(d, sample_words)
    if not rep.passed:
        raise StarPositivityError(rep.witness.data["word"], rep.witness.data["value"])
    return d


# ---------------------------------------------------------------------------
# The infinite tensor model
# ---------------------------------------------------------------------------

def _unit_mul(u, v):
    """(i,j)(k,l) = delta_{jk} (i,l) on matrix units; None means zero."""
    return (u[0], v[1]) if u[1] == v[0] else None


def tensor_model(dim: int, state_weights: Sequence) -> Distribution:
    """Moments of independent copies of the matrix algebra under a diagonal
    state: the moment of a word is the product over distinct positions of the
    state applied to the ordered product of the letters at that position."""
    weights = [w if isinstance(w, QQi) else scalar(w) for w in state_weights]
    if len(weights) != dim:
        raise ValueError("need one weight per matrix dimension")
    if sum((w for w in weights), ZERO) != ONE:
        raise ValueError("state weights must sum to 1")
    if any(w.im != 0 or w.re < 0 for w in weights):
        raise ValueError("state weights must be nonnegative rationals")
    alphabet = tuple((i, j) for i in range(dim) for j in range(dim))

    def phi_b(u) -> QQi:
        return weights[u[0]] if u is not None and u[0] == u[1] else ZERO

    def eval_word(w: MomentWord) -> QQi:
        per_pos: dict[int, Any] = {}
        order: list[int] = []
        for f in w:
            u = (f.letter[1], f.letter[0]) if f.star else tuple(f.letter)
            if f.pos not in per_pos:
                per_pos[f.pos] = u
                order.append(f.pos)
            else:
                cur = per_pos[f.pos]
                per_pos[f.pos] = None if cur is None else _unit_mul(cur, u)
        out = ONE
        for pos in order:
            out = out * phi_b(per_pos[pos])
            if out.is_zero():
                return ZERO
        return out

    return Distribution(
        alphabet=alphabet,
        eval_word=eval_word,
        star_mode=True,
        star_letter=lambda u: (u[1], u[0]),
        name=f"tensor(dim={dim})",
    )


# ---------------------------------------------------------------------------
# SCOs of probability spaces and the sequences they induce
# ---------------------------------------------------------------------------

@dataclasses.dataclass(frozen=True)
class ProbabilitySco:
    """An SCO whose carriers are algebras with a compatible functional.

    multiply/functional/unit take the level as first argument; embed places a
    letter of the generating algebra into the level-0 carrier."""

    sco: Sco
    multiply: Callable[[int, Any, Any], Any]
    functional: Callable[[int, Any], QQi]
    unit: Callable[[int], Any]
    embed: Callable[[Any], Any]
    alphabet: tuple
    adjoint: Optional[Callable[[int, Any], Any]] = None


def verify_functional_invariance(ps: ProbabilitySco) -> CheckReport:
    """phi_n o delta^k = phi_{n-1} on all test elements."""
    s = ps.sco
    checked = 0
    mode = "exhaustive" if all(l.exhaustive for l in s.levels) else "sampled"
    for n in range(1, s.n_max + 1):
        for x in s.levels[n - 1].elements:
            base = ps.functional(n - 1, x)
            for k in range(n + 1):
                checked += 1
                val = ps.functional(n, s.delta(n, k, x))
                if val != base:
                    return reports.failed(
                        checked,
                        "functional not preserved by coface",
                        {"n": n, "k": k, "element": x, "lhs": val, "rhs": base},
                        mode,
                    )
    return reports.passed(checked, mode)


def sco_to_sequence(ps: ProbabilitySco, verify: bool = True):
    """The random variables iota_N = (alpha_0)^N mu_0 of the associated
    partial-shift system; returns (iota, shifts) where iota(N, letter, star)
    is a colimit element."""
    if verify:
        rep = verify_functional_invariance(ps)
        if not rep.passed:
            raise ValueError(f"not an SCO of probability spaces: {rep.to_json()}")
    shifts = shifts_from_sco(ps.sco, verify=verify)

    def iota(n_pos: int, letter, star: bool = False):
        x = ps.embed(letter)
        if star:
            if ps.adjoint is None:
                raise ValueError("no adjoint available on this SCO")
            x = ps.adjoint(0, x)
        c = shifts.mu(0, x)
        for _ in range(n_pos):
            c = shifts.apply_shift(0, c)
        return c

    return iota, shifts


def sequence_distribution(ps: ProbabilitySco, verify: bool = True) -> Distribution:
    """The induced distribution: moments of products of the iota_N images."""
    iota, shifts = sco_to_sequence(ps, verify=verify)

    def eval_word(w: MomentWord) -> QQi:
        if not w:
            return ONE
        elems = [iota(f.pos, f.letter, f.star) for f in w]
        top = max(c.level for c in elems)
        vals = [shifts.push(c, top).value for c in elems]
        prod = vals[0]
        for v in vals[1:]:
            prod = ps.multiply(top, prod, v)
        return ps.functional(top, prod)

    return Distribution(
        alphabet=ps.alphabet,
        eval_word=eval_word,
        star_mode=ps.adjoint is not None,
        name="sequence",
    )


# ---------------------------------------------------------------------------
# The tensor-product SCO (matrix units with a diagonal state)
# ---------------------------------------------------------------------------

def _tens_clean(terms: dict) -> dict:
    return {t: c for t, c in terms.items() if not c.is_zero()}


def tensor_sco(dim: int, state_weights: Sequence, n_max: int) -> ProbabilitySco:
    """Tensor powers of the matrix algebra; delta^k inserts the unit in slot k.

    Elements at level n are linear combinations of (n+1)-fold pure tensors of
    matrix units, stored as {tuple-of-units: coefficient}."""
    weights = [w if isinstance(w, QQi) else scalar(w) for w in state_weights]
    units = [(i, j) for i in range(dim) for j in range(dim)]

    def coface(n: int, k: int, x: dict) -> dict:
        out: dict = {}
        for t, c in x.items():
            for i in range(dim):
                key = t[:k] + ((i, i),) + t[k:]
                out[key] = out.get(key, ZERO) + c
        return _tens_clean(out)

    def multiply(n: int, x: dict, y: dict) -> dict:
        out: dict = {}
        for t1, c1 in x.items():
            for t2, c2 in y.items():
                prod = []
                for u, v in zip(t1, t2):
                    uv = _unit_mul(u, v)
                    if uv is None:
                        prod = None
                        break
                    prod.append(uv)
                if prod is None:
                    continue
                key = tuple(prod)
                out[key] = out.get(key, ZERO) + c1 * c2
        return _tens_clean(out)

    def functional(n: int, x: dict) -> QQi:
        out = ZERO
        for t, c in x.items():
            f = c
            for u in t:
                f = f * (weights[u[0]] if u[0] == u[1] else ZERO)
            out = out + f
        return out

    def unit(n: int) -> dict:
        out: dict = {}
        for t in itertools.product([(i, i) for i in range(dim)], repeat=n + 1):
            out[t] = ONE
        return out

    def adjoint(n: int, x: dict) -> dict:
        return _tens_clean(
            {
                tuple((u[1], u[0]) for u in t): c.conj()
                for t, c in x.items()
            }
        )

    levels = tuple(
        Level(tuple({t: ONE} for t in itertools.product(units, repeat=n + 1)))
        for n in range(n_max + 1)
    )
    return ProbabilitySco(
        sco=Sco(levels=levels, coface=coface),
        multiply=multiply,
        functional=functional,
        unit=unit,
        embed=lambda u: {(tuple(u),): ONE},
        alphabet=tuple(units),
        adjoint=adjoint,
    )
