"""The punctured-plane 1-complex and its edge-path groupoid.

Objects are the symbolic points ``P`` (= 0+e), ``k-e`` and ``k+e`` for
punctures k = 1..n.  The 1-cells are the intervals ``w0 .. w(n-1)`` with
``wk: k+e -> (k+1)-e`` and the half circles ``Lip: i-e -> i+e`` and
``Lim: i+e -> i-e``.  The spanning tree consists of every cell except the
``Lip``; collapsing it identifies loops at ``P`` with free words in which
``Lip`` maps to the j-th free generator.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .words import FreeWord

Edge = tuple[str, int]

_CELL_RE = re.compile(r"(w(\d+))|(L(\d+)(p|m))$")


@dataclass(frozen=True)
class CellComplexSpec:
    """The fixed complex for n punctures; epsilon is a symbolic label only."""

    n: int
    epsilon: str = "e"

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"need at least one puncture, got n={self.n}")

    @property
    def base_point(self) -> str:
        return "P"

    def obj_minus(self, k: int) -> str:
        return f"{k}-{self.epsilon}"

    def obj_plus(self, k: int) -> str:
        return "P" if k == 0 else f"{k}+{self.epsilon}"

    def objects(self) -> list[str]:
        out = ["P"]
        for k in range(1, self.n + 1):
            out.append(self.obj_minus(k))
            out.append(self.obj_plus(k))
        return out

    def w_cells(self) -> list[str]:
        return [f"w{k}" for k in range(self.n)]

    def l_plus_cells(self) -> list[str]:
        return [f"L{i}p" for i in range(1, self.n + 1)]

    def l_minus_cells(self) -> list[str]:
        return [f"L{i}m" for i in range(1, self.n + 1)]

    def cells(self) -> list[str]:
        return self.w_cells() + self.l_plus_cells() + self.l_minus_cells()

    def cell_endpoints(self, cell: str) -> tuple[str, str]:
        m = _CELL_RE.match(cell)
        if m is None:
            raise ValueError(f"unknown cell {cell!r}")
        if m.group(1):
            k = int(m.group(2))
            if not 0 <= k <= self.n - 1:
                raise ValueError(f"cell {cell!r} out of range for n={self.n}")
            return self.obj_plus(k), self.obj_minus(k + 1)
        i = int(m.group(4))
        if not 1 <= i <= self.n:
            raise ValueError(f"cell {cell!r} out of range for n={self.n}")
        if m.group(5) == "p":
            return self.obj_minus(i), self.obj_plus(i)
        return self.obj_plus(i), self.obj_minus(i)

    def loop_index(self, cell: str) -> int | None:
        """Free-generator index of a non-tree cell Ljp, else None."""
        m = _CELL_RE.match(cell)
        if m and m.group(3) and m.group(5) == "p":
            return int(m.group(4))
        return None


def edge_endpoints(cx: CellComplexSpec, edge: Edge) -> tuple[str, str]:
    src, tgt = cx.cell_endpoints(edge[0])
    return (src, tgt) if edge[1] == 1 else (tgt, src)


def _reduce_edges(edges: Iterable[Edge]) -> tuple[Edge, ...]:
    out: list[Edge] = []
    for cell, sign in edges:
        if out and out[-1] == (cell, -sign):
            out.pop()
        else:
            out.append((cell, sign))
    return tuple(out)


@dataclass(frozen=True)
class GroupoidPath:
    """A reduced composable edge path; an empty path is an identity morphism."""

    complex: CellComplexSpec
    edges: tuple[Edge, ...]
    source: str
    target: str

    def __post_init__(self) -> None:
        if self.edges != _reduce_edges(self.edges):
            raise ValueError("path is not reduced")
        at = self.source
        for edge in self.edges:
            src, tgt = edge_endpoints(self.complex, edge)
            if src != at:
                raise ValueError(f"edge {edge} does not start at {at}")
            at = tgt
        if at != self.target:
            raise ValueError(f"path ends at {at}, not the stated target {self.target}")
        if not self.edges and self.source not in self.complex.objects():
            raise ValueError(f"unknown object {self.source!r}")

    def is_identity(self) -> bool:
        return not self.edges

    def is_loop(self) -> bool:
        return self.source == self.target

    def format(self) -> str:
        if not self.edges:
            return "1"
        return " ".join(c + ("" if s == 1 else "^-1") for c, s in self.edges)

    def __str__(self) -> str:
        return self.format()


def make_path(cx: CellComplexSpec, edges: Sequence[Edge], source: str | None = None) -> GroupoidPath:
    """Build a path, reducing the raw edge sequence first."""
    reduced = _reduce_edges(edges)
    if reduced:
        src = edge_endpoints(cx, reduced[0])[0]
        tgt = edge_endpoints(cx, reduced[-1])[1]
    else:
        if source is None:
            # a fully cancelling sequence still pins its endpoints
            if edges:
                source = edge_endpoints(cx, tuple(edges[0]))[0]
            else:
                raise ValueError("empty path needs an explicit source object")
        src = tgt = source
    return GroupoidPath(cx, reduced, src, tgt)


def identity_path(cx: CellComplexSpec, obj: str) -> GroupoidPath:
    return make_path(cx, (), source=obj)


def cell_path(cx: CellComplexSpec, cell: str, sign: int = 1) -> GroupoidPath:
    return make_path(cx, ((cell, sign),))


def compose_paths(p: GroupoidPath, q: GroupoidPath) -> GroupoidPath:
    if p.complex != q.complex:
        raise ValueError("paths live in different complexes")
    if p.target != q.source:
        raise ValueError(f"cannot compose: target {p.target} != source {q.source}")
    return make_path(p.complex, p.edges + q.edges, source=p.source)


def invert_path(p: GroupoidPath) -> GroupoidPath:
    edges = tuple((c, -s) for c, s in reversed(p.edges))
    return GroupoidPath(p.complex, edges, p.target, p.source)


@lru_cache(maxsize=None)
def _base_edges(n: int, obj: str) -> tuple[Edge, ...]:
    cx = CellComplexSpec(n)
    if obj == cx.base_point:
        return ()
    for k in range(1, n + 1):
        if obj == cx.obj_minus(k) or obj == cx.obj_plus(k):
            edges: list[Edge] = []
            for m in range(k):
                edges.append((f"w{m}", 1))
                if m + 1 < k:
                    edges.append((f"L{m + 1}m", -1))
            if obj == cx.obj_plus(k):
                edges.append((f"L{k}m", -1))
            return tuple(edges)
    raise ValueError(f"unknown object {obj!r}")


def base_path(cx: CellComplexSpec, obj: str) -> GroupoidPath:
    """Canonical spanning-tree path from the base point to obj."""
    return make_path(cx, _base_edges(cx.n, obj), source=obj if obj == "P" else None)


def loop_generator(cx: CellComplexSpec, j: int) -> GroupoidPath:
    """The closed loop at P around puncture j (the j-th free generator)."""
    if not 1 <= j <= cx.n:
        raise ValueError(f"loop index {j} out of range for n={cx.n}")
    gamma = base_path(cx, cx.obj_minus(j))
    circle = make_path(cx, ((f"L{j}p", 1), (f"L{j}m", 1)))
    return compose_paths(compose_paths(gamma, circle), invert_path(gamma))


def collapse_to_free(p: GroupoidPath) -> FreeWord:
    """Collapse the spanning tree: the image of p in the free group on Ljp."""
    letters = []
    for cell, sign in p.edges:
        j = p.complex.loop_index(cell)
        if j is not None:
            letters.append((j, sign))
    return FreeWord(tuple(letters))


def word_to_loop(cx: CellComplexSpec, w: FreeWord) -> GroupoidPath:
    """The loop at P representing a free word in the loop generators."""
    out = identity_path(cx, cx.base_point)
    for i, s in w.letters:
        loop = loop_generator(cx, i)
        out = compose_paths(out, loop if s == 1 else invert_path(loop))
    return out
