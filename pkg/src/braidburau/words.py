"""Freely reduced words in a finitely generated free group.

Letters are pairs (generator index >= 1, sign in {+1, -1}).  Words are kept
freely reduced at all times, so equality of group elements is equality of
letter tuples.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

Letter = tuple[int, int]


def reduce_letters(letters: Iterable[Sequence[int]]) -> tuple[Letter, ...]:
    """Freely reduce a raw letter sequence (cancel adjacent g g^-1 pairs)."""
    out: list[Letter] = []
    for raw in letters:
        idx, sign = int(raw[0]), int(raw[1])
        if idx < 1:
            raise ValueError(f"generator index must be >= 1, got {idx}")
        if sign not in (1, -1):
            raise ValueError(f"letter sign must be +1 or -1, got {sign}")
        if out and out[-1] == (idx, -sign):
            out.pop()
        else:
            out.append((idx, sign))
    return tuple(out)


@dataclass(frozen=True)
class FreeWord:
    """A freely reduced word; the empty word is the identity."""

    letters: tuple[Letter, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "letters", reduce_letters(self.letters))

    @staticmethod
    def generator(i: int, sign: int = 1) -> "FreeWord":
        return FreeWord(((i, sign),))

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        if not isinstance(other, FreeWord):
            return NotImplemented
        return FreeWord(self.letters + other.letters)

    def inverse(self) -> "FreeWord":
        return FreeWord(tuple((i, -s) for i, s in reversed(self.letters)))

    def __pow__(self, k: int) -> "FreeWord":
        if k < 0:
            return self.inverse() ** (-k)
        out = FreeWord()
        for _ in range(k):
            out = out * self
        return out

    def is_identity(self) -> bool:
        return not self.letters

    def __len__(self) -> int:
        return len(self.letters)

    def exponent_sum(self, gen: int | None = None) -> int:
        """Total exponent sum, or the exponent sum of a single generator."""
        return sum(s for i, s in self.letters if gen is None or i == gen)

    def max_generator(self) -> int:
        return max((i for i, _ in self.letters), default=0)

    def key(self) -> tuple[Letter, ...]:
        return self.letters

    def format(self, prefix: str = "f") -> str:
        if not self.letters:
            return "1"
        return " ".join(f"{prefix}{i}" + ("" if s == 1 else "^-1") for i, s in self.letters)

    def __str__(self) -> str:
        return self.format()


def parse_word(text: str, prefix: str = "f") -> FreeWord:
    """Parse the CLI word syntax, e.g. "f1 f2^-1 f1"; "1" is the identity."""
    tokens = text.split()
    if tokens == ["1"]:
        return FreeWord()
    pattern = re.compile(rf"{re.escape(prefix)}(\d+)(\^-1)?$")
    letters: list[Letter] = []
    for tok in tokens:
        m = pattern.match(tok)
        if m is None:
            raise ValueError(f"cannot parse letter {tok!r} with prefix {prefix!r}")
        letters.append((int(m.group(1)), -1 if m.group(2) else 1))
    return FreeWord(tuple(letters))
