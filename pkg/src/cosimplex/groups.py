"""Semi-cosimplicial groups: permutation-conjugation cofaces on matrix groups,
symmetric groups with Coxeter/star generators, and braid self-conjugation
checked through representations.

Braid-word identities are never solved symbolically; equality of words is
certified by evaluating both sides in the symmetric-group quotient and in the
unreduced Burau representation at an invertible parameter. Both evaluations
satisfy the braid relations, which is what qualifies them as oracles.
"""

from __future__ import annotations

import dataclasses
import itertools
from typing import Callable, Sequence

from . import linalg
from .braid import BraidAction, BraidWord
from .linalg import Matrix
from .scalars import ONE, ZERO, QQi, scalar
from .simplicial import Level, Sco


@dataclasses.dataclass(frozen=True)
class Permutation:
    """A bijection of {0..n}, stored as the tuple of images."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError(f"not a permutation: {self.images}")

    @property
    def size(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: Permutation) -> Permutation:
        """Composition (self after other)."""
        if self.size != other.size:
            raise ValueError("size mismatch")
        return Permutation(tuple(self.images[other.images[i]] for i in range(self.size)))

    def inverse(self) -> Permutation:
        inv = [0] * self.size
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(tuple(inv))

    @staticmethod
    def identity(size: int) -> Permutation:
        return Permutation(tuple(range(size)))

    @staticmethod
    def transposition(i: int, j: int, size: int) -> Permutation:
        images = list(range(size))
        images[i], images[j] = j, i
        return Permutation(tuple(images))

    @staticmethod
    def cycle(k: int, n: int) -> Permutation:
        """The cycle (k  k+1 ... n) inside S_{n+1}."""
        images = list(range(n + 1))
        for m in range(k, n):
            images[m] = m + 1
        images[n] = k
        return Permutation(tuple(images))

    def matrix(self) -> Matrix:
        # column j of the matrix is e_{images[j]}, so M e_j = e_{p(j)}
        return Matrix.from_rows(
            [
                [ONE if self.images[j] == i else ZERO for j in range(self.size)]
                for i in range(self.size)
            ]
        )


def coxeter(n_gen: int, size: int) -> Permutation:
    """sigma_N = (N-1  N)."""
    return Permutation.transposition(n_gen - 1, n_gen, size)


def star(n_gen: int, size: int) -> Permutation:
    """gamma_N = (0  N)."""
    return Permutation.transposition(0, n_gen, size)


def sym_coface(k: int, p: Permutation) -> Permutation:
    """Insert a fixed point at position k: the image of p under conjugation of
    its one-point extension by the cycle (k ... n)."""
    n = p.size  # p acts on {0..n-1}, result on {0..n}
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}")
    skip = lambda m: m if m < k else m + 1
    images = list(range(n + 1))
    for i in range(n):
        images[skip(i)] = skip(p(i))
    images[k] = k
    return Permutation(tuple(images))


def gl_coface(k: int, m: Matrix) -> Matrix:
    """Insert a k-th row and column with a 1 at the intersection."""
    n = m.rows
    if m.cols != n:
        raise ValueError("matrix must be square")
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= {n}, got k={k}")
    rows = []
    for i in range(n + 1):
        row = []
        for j in range(n + 1):
            if i == k or j == k:
                row.append(ONE if i == j else ZERO)
            else:
                row.append(m[(i - (i > k), j - (j > k))])
        rows.append(row)
    return Matrix.from_rows(rows)


def embed(m: Matrix) -> Matrix:
    """The plain corner embedding diag(m, 1)."""
    return gl_coface(m.rows, m)


def sym_sco(n_max: int) -> Sco:
    """The symmetric groups S_{n+1} as a semi-cosimplicial group, exhaustively."""
    levels = []
    for n in range(n_max + 1):
        perms = tuple(Permutation(t) for t in itertools.permutations(range(n + 1)))
        levels.append(Level(perms))
    return Sco(
        levels=tuple(levels),
        coface=lambda n, k, p: sym_coface(k, p),
        augmentation=Level((Permutation.identity(1),)),
    )


def gl_sco(n_max: int, rng, samples_per_level: int = 12) -> Sco:
    """GL over the rationals with permutation-conjugation cofaces, sampled."""
    levels = []
    for n in range(n_max + 1):
        size = n + 1
        mats = [Matrix.identity(size)]
        while len(mats) < samples_per_level:
            m = linalg.random_matrix(rng, size, size)
            if linalg.rank(m) == size:
                mats.append(m)
        levels.append(Level(tuple(mats), exhaustive=False))
    return Sco(
        levels=tuple(levels),
        coface=lambda n, k, m: gl_coface(k, m),
        augmentation=Level((Matrix.from_rows([[1]]),), exhaustive=False),
    )


# ---------------------------------------------------------------------------
# Braid self-conjugation (checked through representations)
# ---------------------------------------------------------------------------

def braid_conj_coface(k: int, n: int, w: BraidWord) -> BraidWord:
    """delta^k on braid words, returned unsimplified.

    The self-conjugation SCO uses the action where sigma acts on a word by
    x -> sigma^-1 x sigma, applied right to left along the word
    sigma_{k+1} ... sigma_n. As a single product this is C^-1 w C with C the
    descending word sigma_n ... sigma_{k+1}; delta^n is the literal inclusion.
    The top generator sigma_{n+1} is omitted from the conjugator because it
    commutes with every admissible w, so evaluations are unchanged while the
    output stays a valid word one level up. This is the convention under
    which both generator rules hold representation-wise: delta^0 maps the
    Coxeter generator sigma_N to sigma_{N+1}, and for k >= 1 the square-root
    generators transform by gamma_N -> gamma_N (N < k) or gamma_{N+1}
    (N >= k); it is also the convention whose symmetric-group quotient is
    the insert-a-fixed-point coface."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}")
    for idx, _ in w.letters:
        if idx > n - 1:
            raise ValueError(f"generator index {idx} exceeds level {n}")
    if k == n:
        return w
    descending = BraidWord.positive(range(n, k, -1))
    return descending.inverse() * w * descending


def square_root_generator(n_gen: int) -> BraidWord:
    """gamma_N = (s1 ... s_{N-1}) s_N (s_{N-1}^-1 ... s1^-1)."""
    pre = BraidWord.positive(range(1, n_gen))
    return pre * BraidWord.positive([n_gen]) * pre.inverse()


def perm_of_word(w: BraidWord, size: int) -> Permutation:
    """Evaluate a braid word in the symmetric-group quotient."""
    out = Permutation.identity(size)
    for idx, _ in w.letters:  # transpositions are self-inverse
        out = out * Permutation.transposition(idx - 1, idx, size)
    return out


def burau_eval(g: int, size: int, t: QQi) -> Matrix:
    """The unreduced Burau matrix of sigma_g on `size` strands."""
    if t.is_zero():
        raise ValueError("Burau parameter t must be nonzero")
    if not 1 <= g <= size - 1:
        raise ValueError(f"generator index {g} out of range for {size} strands")
    rows = [[ONE if i == j else ZERO for j in range(size)] for i in range(size)]
    one = ONE
    rows[g - 1][g - 1] = one - t
    rows[g - 1][g] = t
    rows[g][g - 1] = one
    rows[g][g] = ZERO
    return Matrix.from_rows(rows)


def burau_of_word(w: BraidWord, size: int, t: QQi) -> Matrix:
    out = Matrix.identity(size)
    for idx, sign in w.letters:
        m = burau_eval(idx, size, t)
        out = out * (m if sign == 1 else linalg.inverse(m))
    return out


def matrix_action(
    generators: Sequence[Matrix], elements: Sequence[Matrix], exhaustive: bool = False
) -> BraidAction:
    """Conjugation action of braid generators realized as invertible matrices.

    sigma_k acts by g_k x g_k^{-1}; generators beyond the list act as the
    identity, so the stabilization bound is len(generators)."""
    size = generators[0].rows
    gens = list(generators)
    invs = [linalg.inverse(g) for g in gens]

    def apply(i: int, x: Matrix) -> Matrix:
        if i > len(gens):
            return x
        return gens[i - 1] * x * invs[i - 1]

    def inverse_apply(i: int, x: Matrix) -> Matrix:
        if i > len(gens):
            return x
        return invs[i - 1] * x * gens[i - 1]

    del size
    return BraidAction(
        apply=apply,
        elements=tuple(elements),
        inverse_apply=inverse_apply,
        stabilization_bound=len(gens),
        exhaustive=exhaustive,
        name="matrix-conjugation",
    )


def permutation_matrix_generators(size: int) -> list[Matrix]:
    """sigma_i as the permutation matrix of the transposition (i-1, i)."""
    return [
        Permutation.transposition(i - 1, i, size).matrix() for i in range(1, size)
    ]


def burau_generators(size: int, t: QQi) -> list[Matrix]:
    return [burau_eval(g, size, t) for g in range(1, size)]
