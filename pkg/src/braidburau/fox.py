"""Fox derivation on the edge-path groupoid of the punctured-plane complex.

The derivation sends a path to a chain of 1-cell symbols with coefficients
in the integral ring of the fundamental group at the base point, written as
free words via the spanning-tree collapse.  Because the base paths lie in
the spanning tree, the coefficient picked up at every step of the product
rule is just the collapse of the already-consumed prefix of the path.
"""

from __future__ import annotations

from .complexes import GroupoidPath
from .rings import RingElement
from .words import FreeWord


class ChainElement:
    """A finite formal combination of 1-cells with group-ring coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[str, RingElement] | None = None):
        self.terms = {c: r for c, r in (terms or {}).items() if not r.is_zero()}

    @staticmethod
    def zero() -> "ChainElement":
        return ChainElement()

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, cell: str) -> RingElement:
        return self.terms.get(cell, RingElement.zero())

    def cells(self) -> list[str]:
        return sorted(self.terms)

    def __add__(self, other: "ChainElement") -> "ChainElement":
        out = dict(self.terms)
        for c, r in other.terms.items():
            s = out.get(c, RingElement.zero()) + r
            if s.is_zero():
                out.pop(c, None)
            else:
                out[c] = s
        return ChainElement(out)

    def __neg__(self) -> "ChainElement":
        return ChainElement({c: -r for c, r in self.terms.items()})

    def __sub__(self, other: "ChainElement") -> "ChainElement":
        return self + (-other)

    def left_mul(self, r: RingElement) -> "ChainElement":
        return ChainElement({c: r * v for c, v in self.terms.items()})

    def restrict(self, cells) -> "ChainElement":
        keep = set(cells)
        return ChainElement({c: r for c, r in self.terms.items() if c in keep})

    def __eq__(self, other) -> bool:
        if not isinstance(other, ChainElement):
            return NotImplemented
        return self.cells() == other.cells() and all(
            self.terms[c] == other.terms[c] for c in self.terms
        )

    def __hash__(self):
        raise TypeError("ChainElement is not hashable")

    def format(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({self.terms[c].format()})[{c}]" for c in self.cells())

    def __str__(self) -> str:
        return self.format()


def fox_derive(p: GroupoidPath) -> ChainElement:
    """Groupoid Fox derivation with spanning-tree base paths.

    For the path e_1 ... e_k the cell e_i = s^{+1} contributes the collapse
    of e_1 ... e_{i-1} times [s]; the cell e_i = s^{-1} contributes minus the
    collapse of e_1 ... e_i times [s].
    """
    cx = p.complex
    out = ChainElement()
    prefix: list[tuple[int, int]] = []
    for cell, sign in p.edges:
        j = cx.loop_index(cell)
        if sign == 1:
            coeff = RingElement.of(FreeWord(tuple(prefix)))
            out = out + ChainElement({cell: coeff})
            if j is not None:
                prefix.append((j, 1))
        else:
            if j is not None:
                prefix.append((j, -1))
            coeff = RingElement.of(FreeWord(tuple(prefix)), -1)
            out = out + ChainElement({cell: coeff})
    return out
