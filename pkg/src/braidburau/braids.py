"""Braid words, the Artin action on free groups, and the cellular action.

Braid equality is decided through the faithful Artin action: two words are
equal iff they act identically on every free generator.  The same action,
restricted from the cellular action on the punctured-plane complex, is the
word-problem oracle used throughout.

Conventions pinned here (and exercised by the test suite):

* a braid word acts with its rightmost letter first, so the action is a
  homomorphism into Aut(F_n) composed as functions;
* the semidirect product multiplies as (b, u)(b', u') = (bb', b'^-1(u) u');
* the strand-adding embedding sends the j-th free generator to the band
  generator in which strand 1+n encircles strand j, and a braid generator to
  the inverse of the same-index generator.  With these images, conjugation
  by the embedded braid realizes the action on the free part exactly, which
  is what makes the embedding multiplicative; sending a generator to the
  positive same-index generator fails that consistency check, and the test
  suite keeps a regression witness for the failure.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .complexes import (
    CellComplexSpec,
    Edge,
    GroupoidPath,
    make_path,
)
from .words import FreeWord, parse_word

WORD_LENGTH_CAP = 10_000


class ResourceError(ValueError):
    """Raised when an exact computation exceeds the desk-scale word cap."""


@dataclass(frozen=True)
class Braid:
    """A braid on n strands, stored as a freely reduced word in s1..s(n-1)."""

    n: int
    word: FreeWord = FreeWord()

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"strand count must be >= 1, got {self.n}")
        if self.word.max_generator() > self.n - 1:
            raise ValueError(
                f"generator index {self.word.max_generator()} out of range for B_{self.n}"
            )

    @staticmethod
    def identity(n: int) -> "Braid":
        return Braid(n, FreeWord())

    @staticmethod
    def generator(n: int, i: int, sign: int = 1) -> "Braid":
        return Braid(n, FreeWord(((i, sign),)))

    def __mul__(self, other: "Braid") -> "Braid":
        if not isinstance(other, Braid):
            return NotImplemented
        if self.n != other.n:
            raise ValueError("strand-count mismatch")
        return Braid(self.n, self.word * other.word)

    def inverse(self) -> "Braid":
        return Braid(self.n, self.word.inverse())

    def __pow__(self, k: int) -> "Braid":
        return Braid(self.n, self.word**k)

    def is_identity_word(self) -> bool:
        return self.word.is_identity()

    def exponent_sum(self) -> int:
        return self.word.exponent_sum()

    def permutation(self) -> tuple[int, ...]:
        """Induced permutation as the tuple (pi(1), ..., pi(n))."""
        pi = list(range(1, self.n + 1))
        for i, _ in reversed(self.word.letters):
            pi[i - 1], pi[i] = pi[i], pi[i - 1]
        return tuple(pi)

    def key(self) -> tuple:
        """Canonical form: the tuple of Artin images of all free generators."""
        return _artin_key(self.n, self.word.letters)

    def is_identity(self) -> bool:
        return self.key() == Braid.identity(self.n).key()

    def format(self) -> str:
        return self.word.format("s")

    def __str__(self) -> str:
        return self.format()


def parse_braid(n: int, text: str) -> Braid:
    return Braid(n, parse_word(text, prefix="s"))


def _act_letter(i: int, sign: int, w: FreeWord, n: int) -> FreeWord:
    """Image of w under one Artin generator (or its inverse)."""
    if not 1 <= i <= n - 1:
        raise ValueError(f"braid generator index {i} out of range for B_{n}")
    out: list[tuple[int, int]] = []
    for j, s in w.letters:
        if j > n:
            raise ValueError(f"free generator f{j} out of range for F_{n}")
        if sign == 1:
            if j == i:
                img = ((i, 1), (i + 1, 1), (i, -1))
            elif j == i + 1:
                img = ((i, 1),)
            else:
                img = ((j, 1),)
        else:
            if j == i:
                img = ((i + 1, 1),)
            elif j == i + 1:
                img = ((i + 1, -1), (i, 1), (i + 1, 1))
            else:
                img = ((j, 1),)
        out.extend(img if s == 1 else tuple((a, -b) for a, b in reversed(img)))
        if len(out) > WORD_LENGTH_CAP:
            raise ResourceError(f"Artin image exceeds {WORD_LENGTH_CAP} letters")
    return FreeWord(tuple(out))


def artin_act(b: Braid, w: FreeWord) -> FreeWord:
    """Apply the Artin automorphism of b to w (rightmost braid letter first)."""
    if w.max_generator() > b.n:
        raise ValueError(f"free generator index out of range for F_{b.n}")
    for i, s in reversed(b.word.letters):
        w = _act_letter(i, s, w, b.n)
    return w


@lru_cache(maxsize=None)
def _artin_key(n: int, letters: tuple) -> tuple:
    b = Braid(n, FreeWord(letters))
    return tuple(artin_act(b, FreeWord.generator(j)).letters for j in range(1, n + 1))


def braid_equal(a: Braid, b: Braid) -> bool:
    """Exact word problem for B_n via the faithful Artin representation."""
    if a.n != b.n:
        raise ValueError("strand-count mismatch")
    return a.key() == b.key()


# ---------------------------------------------------------------------------
# cellular action on the punctured-plane complex


def _tau_object(cx: CellComplexSpec, i: int, obj: str) -> str:
    swap = {
        cx.obj_minus(i): cx.obj_plus(i + 1),
        cx.obj_plus(i + 1): cx.obj_minus(i),
        cx.obj_plus(i): cx.obj_minus(i + 1),
        cx.obj_minus(i + 1): cx.obj_plus(i),
    }
    return swap.get(obj, obj)


@lru_cache(maxsize=None)
def _cell_images(n: int, i: int, sign: int) -> dict[str, tuple[Edge, ...]]:
    if not 1 <= i <= n - 1:
        raise ValueError(f"braid generator index {i} out of range for B_{n}")
    lo, hi = i, i + 1
    if sign == 1:
        table: dict[str, tuple[Edge, ...]] = {
            f"w{i - 1}": ((f"w{i - 1}", 1), (f"L{lo}p", 1), (f"w{i}", 1), (f"L{hi}p", 1)),
            f"w{i}": ((f"w{i}", -1),),
        }
        if i + 1 <= n - 1:
            table[f"w{i + 1}"] = (
                (f"L{lo}m", -1),
                (f"w{i}", 1),
                (f"L{hi}m", -1),
                (f"w{i + 1}", 1),
            )
    else:
        table = {
            f"w{i - 1}": ((f"w{i - 1}", 1), (f"L{lo}m", -1), (f"w{i}", 1), (f"L{hi}m", -1)),
            f"w{i}": ((f"w{i}", -1),),
        }
        if i + 1 <= n - 1:
            table[f"w{i + 1}"] = (
                (f"L{lo}p", 1),
                (f"w{i}", 1),
                (f"L{hi}p", 1),
                (f"w{i + 1}", 1),
            )
    # the half circles swap the same way for the generator and its inverse
    table[f"L{lo}p"] = ((f"L{hi}m", 1),)
    table[f"L{lo}m"] = ((f"L{hi}p", 1),)
    table[f"L{hi}p"] = ((f"L{lo}m", 1),)
    table[f"L{hi}m"] = ((f"L{lo}p", 1),)
    return table


def groupoid_act_letter(i: int, sign: int, p: GroupoidPath) -> GroupoidPath:
    cx = p.complex
    table = _cell_images(cx.n, i, sign)
    edges: list[Edge] = []
    for cell, s in p.edges:
        img = table.get(cell, ((cell, 1),))
        edges.extend(img if s == 1 else tuple((c, -t) for c, t in reversed(img)))
    return make_path(cx, edges, source=_tau_object(cx, i, p.source))


def groupoid_act(i: int, p: GroupoidPath) -> GroupoidPath:
    """Cellular action of the i-th braid generator on a path."""
    return groupoid_act_letter(i, 1, p)


def groupoid_act_word(b: Braid, p: GroupoidPath) -> GroupoidPath:
    """Cellular action of a braid word (rightmost letter first)."""
    if b.n != p.complex.n:
        raise ValueError("strand count does not match the complex")
    for i, s in reversed(b.word.letters):
        p = groupoid_act_letter(i, s, p)
    return p


# ---------------------------------------------------------------------------
# pure braid generators, semidirect product and the strand-adding embedding


def pure_braid_gen(i: int, j: int, n: int) -> Braid:
    """Band generator: strand j encircles strand i once (symmetric in i, j)."""
    i, j = min(i, j), max(i, j)
    if not (1 <= i < j <= n):
        raise ValueError(f"need 1 <= i < j <= n, got i={i}, j={j}, n={n}")
    letters: list[tuple[int, int]] = [(k, 1) for k in range(j - 1, i, -1)]
    letters += [(i, 1), (i, 1)]
    letters += [(k, -1) for k in range(i + 1, j)]
    return Braid(n, FreeWord(tuple(letters)))


@dataclass(frozen=True)
class SemidirectElement:
    """An element (b, u) of the semidirect product of B_n with F_n."""

    braid: Braid
    free: FreeWord = FreeWord()

    def __post_init__(self) -> None:
        if self.free.max_generator() > self.braid.n:
            raise ValueError("free part out of range for the strand count")

    @property
    def n(self) -> int:
        return self.braid.n

    @staticmethod
    def identity(n: int) -> "SemidirectElement":
        return SemidirectElement(Braid.identity(n))

    @staticmethod
    def from_braid(b: Braid) -> "SemidirectElement":
        return SemidirectElement(b)

    @staticmethod
    def from_free(n: int, u: FreeWord) -> "SemidirectElement":
        return SemidirectElement(Braid.identity(n), u)

    def __mul__(self, other: "SemidirectElement") -> "SemidirectElement":
        if not isinstance(other, SemidirectElement):
            return NotImplemented
        if self.n != other.n:
            raise ValueError("strand-count mismatch")
        # (b, u)(b', u') = (b b', b'^-1(u) u')
        moved = artin_act(other.braid.inverse(), self.free)
        return SemidirectElement(self.braid * other.braid, moved * other.free)

    def inverse(self) -> "SemidirectElement":
        return SemidirectElement(self.braid.inverse(), artin_act(self.braid, self.free.inverse()))

    def key(self) -> tuple:
        return (self.braid.key(), self.free.letters)

    def is_identity(self) -> bool:
        return self.free.is_identity() and self.braid.is_identity()

    def format(self) -> str:
        return f"({self.braid.format()}; {self.free.format()})"

    def __str__(self) -> str:
        return self.format()


def free_then_braid(n: int, u: FreeWord, b: Braid) -> SemidirectElement:
    """The product u . b written in (braid, free) normal form."""
    return SemidirectElement(b, artin_act(b.inverse(), u))


def embed_free_generator(j: int, n: int) -> Braid:
    """Image in B_{1+n} of the j-th free generator of F_n."""
    return pure_braid_gen(j, n + 1, n + 1)


def embed_braid(b: Braid) -> Braid:
    """Image in B_{1+n} of a braid on n strands (generator -> inverse generator)."""
    return Braid(b.n + 1, FreeWord(tuple((i, -s) for i, s in b.word.letters)))


def embed_semidirect(x: SemidirectElement) -> Braid:
    """Embed the semidirect product into the braid group on 1+n strands.

    The map is multiplicative for the pinned semidirect law because
    conjugation by embed_braid(b) acts on the embedded free subgroup exactly
    as b acts on the free group.
    """
    n = x.n
    out = embed_braid(x.braid)
    for j, s in x.free.letters:
        band = embed_free_generator(j, n)
        out = out * (band if s == 1 else band.inverse())
    return out
