"""Exact integral group rings and matrices over them.

A ring element is a finite integer combination of group elements.  The
group element type must provide ``key()`` (a hashable canonical form),
``__mul__``, ``inverse()`` and ``is_identity()``; free words, braids and
semidirect elements all qualify.  Matrices are stored row-major with the
convention that row r expands the image of the r-th basis element, which is
how the displayed matrix families in this package are written.

The crossed composition law for labeled matrices is pinned by the braid
relation tests: for matrices A (braid b) and B (braid b'), the matrix of
b b' is (b applied to the entries of B) times A.  The mirror candidate,
B times (b'^-1 applied to the entries of A), violates the relations and is
kept out; a regression test exercises the failure.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable

from .braids import Braid, artin_act
from .words import FreeWord


class RingElement:
    """A finite integer-linear combination of group elements."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        self.terms = {k: (c, g) for k, (c, g) in (terms or {}).items() if c != 0}

    @staticmethod
    def zero() -> "RingElement":
        return RingElement()

    @staticmethod
    def of(element, coeff: int = 1) -> "RingElement":
        if coeff == 0:
            return RingElement()
        return RingElement({element.key(): (coeff, element)})

    @staticmethod
    def one_free() -> "RingElement":
        return RingElement.of(FreeWord())

    def is_zero(self) -> bool:
        return not self.terms

    def items_sorted(self) -> list:
        return [self.terms[k] for k in sorted(self.terms)]

    def coefficient(self, element) -> int:
        entry = self.terms.get(element.key())
        return entry[0] if entry else 0

    def support_size(self) -> int:
        return len(self.terms)

    def __add__(self, other: "RingElement") -> "RingElement":
        if not isinstance(other, RingElement):
            return NotImplemented
        out = dict(self.terms)
        for k, (c, g) in other.terms.items():
            if k in out:
                c0 = out[k][0] + c
                if c0 == 0:
                    del out[k]
                else:
                    out[k] = (c0, g)
            else:
                out[k] = (c, g)
        return RingElement(out)

    def __neg__(self) -> "RingElement":
        return RingElement({k: (-c, g) for k, (c, g) in self.terms.items()})

    def __sub__(self, other: "RingElement") -> "RingElement":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return RingElement({k: (c * other, g) for k, (c, g) in self.terms.items()} if other else {})
        if not isinstance(other, RingElement):
            return NotImplemented
        out: dict = {}
        for _, (c1, g1) in self.terms.items():
            for _, (c2, g2) in other.terms.items():
                g = g1 * g2
                k = g.key()
                if k in out:
                    c = out[k][0] + c1 * c2
                    if c == 0:
                        del out[k]
                    else:
                        out[k] = (c, g)
                else:
                    out[k] = (c1 * c2, g)
        return RingElement(out)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __eq__(self, other) -> bool:
        if not isinstance(other, RingElement):
            return NotImplemented
        return {k: c for k, (c, _) in self.terms.items()} == {
            k: c for k, (c, _) in other.terms.items()
        }

    def __hash__(self):
        raise TypeError("RingElement is not hashable")

    def map_group(self, fn: Callable) -> "RingElement":
        """Apply a group map to every term (a ring homomorphism if fn is one)."""
        out = RingElement()
        for _, (c, g) in self.terms.items():
            out = out + RingElement.of(fn(g), c)
        return out

    def format(self, prefix: str = "f") -> str:
        if not self.terms:
            return "0"
        parts: list[str] = []
        for c, g in self.items_sorted():
            body = "1" if g.is_identity() else g.format(prefix) if isinstance(g, FreeWord) else g.format()
            if body == "1":
                text = str(abs(c))
            elif abs(c) == 1:
                text = body
            else:
                text = f"{abs(c)} {body}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, text))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, text in parts[1:]:
            out += f" {sign} {text}"
        return out

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"RingElement({self.format()})"


def ring_add(a: RingElement, b: RingElement) -> RingElement:
    return a + b


def ring_mul(a: RingElement, b: RingElement) -> RingElement:
    return a * b


@dataclass
class RingMatrix:
    """A rectangular matrix over a group ring, optionally labeled by a braid."""

    rows: int
    cols: int
    entries: list[list[RingElement]]
    label: Braid | None = None

    def __post_init__(self) -> None:
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError("entry grid does not match the stated shape")

    @staticmethod
    def zero(rows: int, cols: int, label: Braid | None = None) -> "RingMatrix":
        return RingMatrix(rows, cols, [[RingElement.zero() for _ in range(cols)] for _ in range(rows)], label)

    @staticmethod
    def identity(size: int, one: RingElement | None = None, label: Braid | None = None) -> "RingMatrix":
        one = RingElement.one_free() if one is None else one
        out = RingMatrix.zero(size, size, label)
        for i in range(size):
            out.entries[i][i] = one
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, RingMatrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and all(
                self.entries[r][c] == other.entries[r][c]
                for r in range(self.rows)
                for c in range(self.cols)
            )
        )

    def map_entries(self, fn: Callable[[RingElement], RingElement]) -> "RingMatrix":
        return RingMatrix(
            self.rows,
            self.cols,
            [[fn(e) for e in row] for row in self.entries],
            self.label,
        )

    def transpose(self) -> "RingMatrix":
        return RingMatrix(
            self.cols,
            self.rows,
            [[self.entries[r][c] for r in range(self.rows)] for c in range(self.cols)],
            self.label,
        )

    def format(self, prefix: str = "f") -> str:
        texts = [[e.format(prefix) for e in row] for row in self.entries]
        widths = [max(len(texts[r][c]) for r in range(self.rows)) for c in range(self.cols)]
        lines = [
            "[" + "  ".join(texts[r][c].rjust(widths[c]) for c in range(self.cols)) + "]"
            for r in range(self.rows)
        ]
        return "\n".join(lines)


def matrix_mul(a: RingMatrix, b: RingMatrix) -> RingMatrix:
    """Plain product over the (noncommutative) ring; A-entries multiply from the left."""
    if a.cols != b.rows:
        raise ValueError(f"shape mismatch: {a.rows}x{a.cols} times {b.rows}x{b.cols}")
    out = RingMatrix.zero(a.rows, b.cols)
    for r in range(a.rows):
        for k in range(a.cols):
            e = a.entries[r][k]
            if e.is_zero():
                continue
            for c in range(b.cols):
                f = b.entries[k][c]
                if f.is_zero():
                    continue
                out.entries[r][c] = out.entries[r][c] + e * f
    return out


def apply_braid_to_entries(b: Braid, a: RingMatrix) -> RingMatrix:
    """Apply the Artin automorphism of b to every free-word term of every entry."""

    def act(g):
        if not isinstance(g, FreeWord):
            raise ValueError("entries must lie in the free-group ring")
        return artin_act(b, g)

    return a.map_entries(lambda e: e.map_group(act))


def twisted_compose(a: RingMatrix, b: RingMatrix) -> RingMatrix:
    """Crossed composition: the matrix of label(a)·label(b).

    Pinned law (row-major storage): M_{b b'} = (b applied to M_{b'}) · M_b.
    """
    if a.label is None or b.label is None:
        raise ValueError("twisted composition needs labeled matrices")
    out = matrix_mul(apply_braid_to_entries(a.label, b), a)
    out.label = a.label * b.label
    return out


def twisted_compose_rejected(a: RingMatrix, b: RingMatrix) -> RingMatrix:
    """The losing candidate law, kept only as a regression witness."""
    if a.label is None or b.label is None:
        raise ValueError("twisted composition needs labeled matrices")
    out = matrix_mul(b, apply_braid_to_entries(b.label.inverse(), a))
    out.label = a.label * b.label
    return out


def matrices_equal_labeled(a: RingMatrix, b: RingMatrix) -> bool:
    """Entry-wise equality plus group-level equality of the labels."""
    from .braids import braid_equal

    if a != b:
        return False
    if (a.label is None) != (b.label is None):
        return False
    return a.label is None or braid_equal(a.label, b.label)
