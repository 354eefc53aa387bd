"""Braid-valued Burau matrices from the cellular action, their closed
forms, classical specializations, and one level of the iteration scheme.

Two independent routes produce the same families and cross-check each other:

* ``burau_from_groupoid`` runs the cellular action through the Fox
  derivation.  For the reduced form it transports the basis chains [w_j]
  and projects away the half-circle cells (the invariant submodule); for
  the unreduced form it expands the transported loop chains in the basis
  of derived loop generators.
* ``burau_closed_form`` writes the same matrices down from their block
  templates.

Matrices are row-major: row r expands the image of the r-th basis element.
A braid word maps to a matrix by folding the pinned crossed composition of
rings.twisted_compose over its letters; under a specialization with all
puncture variables equal, the fold degenerates to a plain product with the
rightmost letter's matrix applied first.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .braids import (
    Braid,
    SemidirectElement,
    braid_equal,
    embed_braid,
    embed_semidirect,
    free_then_braid,
    groupoid_act_letter,
)
from .complexes import (
    CellComplexSpec,
    base_path,
    cell_path,
    collapse_to_free,
    compose_paths,
    invert_path,
    loop_generator,
)
from .fox import ChainElement, fox_derive
from .laurent import LaurentQ
from .rings import RingElement, RingMatrix, matrix_mul, twisted_compose
from .words import FreeWord

FORMS = ("reduced", "unreduced")


def _check_form(form: str) -> None:
    if form not in FORMS:
        raise ValueError(f"unknown family form {form!r}; expected one of {FORMS}")


# ---------------------------------------------------------------------------
# transported chains


@lru_cache(maxsize=None)
def _cell_chain(n: int, i: int, sign: int, cell: str) -> ChainElement:
    """Image chain of the basis cell under one braid letter.

    The chain is the loop coefficient (transported base path against the
    canonical one) times the Fox derivative of the transported cell.
    """
    cx = CellComplexSpec(n)
    src, _ = cx.cell_endpoints(cell)
    image = groupoid_act_letter(i, sign, cell_path(cx, cell))
    moved_base = groupoid_act_letter(i, sign, base_path(cx, src))
    loop = compose_paths(moved_base, invert_path(base_path(cx, moved_base.target)))
    coeff = RingElement.of(collapse_to_free(loop))
    return fox_derive(image).left_mul(coeff)


@lru_cache(maxsize=None)
def _delta_loop(n: int, j: int) -> ChainElement:
    return fox_derive(loop_generator(CellComplexSpec(n), j))


def _chain_row(chain: ChainElement, basis: list[str]) -> list[RingElement]:
    return [chain.coefficient(c) for c in basis]


def expand_in_loop_basis(n: int, chain: ChainElement) -> list[RingElement]:
    """Write a chain as a combination of the derived loop generators.

    The coefficient on the k-th generator is read off the Ljp cell, which
    occurs in exactly one basis chain; the remainder must vanish.
    """
    coeffs = [chain.coefficient(f"L{k}p") for k in range(1, n + 1)]
    rest = chain
    for k, c in enumerate(coeffs, start=1):
        rest = rest - _delta_loop(n, k).left_mul(c)
    if not rest.is_zero():
        raise ValueError("chain does not lie in the span of the loop chains")
    return coeffs


# ---------------------------------------------------------------------------
# the families


@dataclass
class BurauFamily:
    """The braid-valued family: one labeled matrix per braid generator."""

    n: int
    form: str
    matrices: list[RingMatrix]

    def generator_matrix(self, i: int, sign: int = 1) -> RingMatrix:
        if not 1 <= i <= self.n - 1:
            raise ValueError(f"generator index {i} out of range for B_{self.n}")
        if sign == 1:
            return self.matrices[i - 1]
        return _groupoid_matrix(self.n, self.form, i, -1)

    def word_matrix(self, b: Braid) -> RingMatrix:
        """Matrix of a braid word via the pinned crossed composition."""
        if b.n != self.n:
            raise ValueError("strand-count mismatch")
        out = RingMatrix.identity(self.matrices[0].rows, label=Braid.identity(self.n))
        for i, s in b.word.letters:
            out = twisted_compose(out, self.generator_matrix(i, s))
        return out


@lru_cache(maxsize=None)
def _groupoid_matrix(n: int, form: str, i: int, sign: int) -> RingMatrix:
    cx = CellComplexSpec(n)
    label = Braid.generator(n, i, sign)
    if form == "reduced":
        basis = cx.w_cells()
        rows = [_chain_row(_cell_chain(n, i, sign, c), basis) for c in basis]
    else:
        rows = []
        for j in range(1, n + 1):
            moved = groupoid_act_letter(i, sign, loop_generator(cx, j))
            rows.append(expand_in_loop_basis(n, fox_derive(moved)))
    return RingMatrix(len(rows), len(rows), rows, label)


def burau_from_groupoid(n: int, form: str) -> BurauFamily:
    """The family computed from the cellular action (the authoritative route)."""
    if n < 2:
        raise ValueError("need at least two strands")
    _check_form(form)
    return BurauFamily(n, form, [_groupoid_matrix(n, form, i, 1) for i in range(1, n)])


def burau_closed_form(n: int, form: str) -> BurauFamily:
    """The same family assembled from its block templates.

    The reduced 3-block sits on the rows of the three interval cells the
    generator moves, so for the top generator the block loses its last row
    and column.
    """
    if n < 2:
        raise ValueError("need at least two strands")
    _check_form(form)
    one = RingElement.one_free()
    mats = []
    for i in range(1, n):
        m = RingMatrix.identity(n, label=Braid.generator(n, i))
        f_i = RingElement.of(FreeWord.generator(i))
        if form == "reduced":
            m.entries[i - 1][i] = f_i
            m.entries[i][i] = -f_i
            if i + 1 <= n - 1:
                m.entries[i + 1][i] = one
        else:
            conj = FreeWord.generator(i) * FreeWord.generator(i + 1) * FreeWord.generator(i, -1)
            m.entries[i - 1][i - 1] = one - RingElement.of(conj)
            m.entries[i - 1][i] = f_i
            m.entries[i][i - 1] = one
            m.entries[i][i] = RingElement.zero()
        mats.append(m)
    return BurauFamily(n, form, mats)


# ---------------------------------------------------------------------------
# specializations


def specialize_ring_element(e: RingElement, exps: dict[int, Fraction]) -> LaurentQ:
    """Send the j-th free generator to the monomial q^exps[j]."""
    out = LaurentQ.zero()
    for _, (c, g) in e.terms.items():
        if not isinstance(g, FreeWord):
            raise ValueError("can only specialize free-group entries")
        total = Fraction(0)
        for j, s in g.letters:
            total += s * exps[j]
        out = out + LaurentQ.monomial(c, total)
    return out


@dataclass
class SpecializedFamily:
    """A family of plain matrices over the rational-exponent Laurent ring."""

    n: int
    form: str
    matrices: list[list[list[LaurentQ]]]
    exps: dict[int, Fraction]
    scalar_exp: Fraction
    symbol: str = "t"

    def generator_matrix(self, i: int, sign: int = 1) -> list[list[LaurentQ]]:
        if sign == 1:
            return self.matrices[i - 1]
        return _specialized_letter(self, i, -1)

    def word_matrix(self, b: Braid) -> list[list[LaurentQ]]:
        """Plain product of letter matrices, rightmost letter applied first."""
        if b.n != self.n:
            raise ValueError("strand-count mismatch")
        out = _laurent_identity(len(self.matrices[0]))
        for i, s in reversed(b.word.letters):
            out = _laurent_mat_mul(self.generator_matrix(i, s), out)
        return out


def _laurent_identity(size: int) -> list[list[LaurentQ]]:
    return [[LaurentQ.one() if r == c else LaurentQ.zero() for c in range(size)] for r in range(size)]


def _laurent_mat_mul(a, b):
    if len(a[0]) != len(b):
        raise ValueError("shape mismatch")
    out = [[LaurentQ.zero() for _ in range(len(b[0]))] for _ in range(len(a))]
    for r in range(len(a)):
        for k in range(len(b)):
            if a[r][k].is_zero():
                continue
            for c in range(len(b[0])):
                if not b[k][c].is_zero():
                    out[r][c] = out[r][c] + a[r][k] * b[k][c]
    return out


def _specialize_matrix(m: RingMatrix, exps: dict[int, Fraction], scalar: LaurentQ) -> list[list[LaurentQ]]:
    return [[specialize_ring_element(e, exps) * scalar for e in row] for row in m.entries]


def _specialized_letter(fam: SpecializedFamily, i: int, sign: int) -> list[list[LaurentQ]]:
    scalar = LaurentQ.monomial(1, sign * fam.scalar_exp)
    return _specialize_matrix(_groupoid_matrix(fam.n, fam.form, i, sign), fam.exps, scalar)


def specialize_classical(family: BurauFamily, exp: Fraction | int = 1, symbol: str = "t") -> SpecializedFamily:
    """Classical specialization: every braid label to 1, every f_j to t = q^exp."""
    exps = {j: Fraction(exp) for j in range(1, family.n + 1)}
    one = LaurentQ.one()
    mats = [_specialize_matrix(m, exps, one) for m in family.matrices]
    return SpecializedFamily(family.n, family.form, mats, exps, Fraction(0), symbol)


# ---------------------------------------------------------------------------
# the full cellular matrices (all 3n one-cells), used for homology monodromy


@lru_cache(maxsize=None)
def _full_cell_matrix(n: int, i: int, sign: int) -> RingMatrix:
    cx = CellComplexSpec(n)
    basis = cx.cells()
    rows = [_chain_row(_cell_chain(n, i, sign, c), basis) for c in basis]
    return RingMatrix(3 * n, 3 * n, rows, Braid.generator(n, i, sign))


def full_cell_family(n: int) -> BurauFamily:
    """The 3n-dimensional cellular family (the reduced family's ambient form)."""
    return BurauFamily(n, "reduced", [_full_cell_matrix(n, i, 1) for i in range(1, n)])


def specialized_cell_matrix(n: int, i: int, sign: int, exp: Fraction) -> list[list[LaurentQ]]:
    exps = {j: Fraction(exp) for j in range(1, n + 1)}
    return _specialize_matrix(_full_cell_matrix(n, i, sign), exps, LaurentQ.one())


def cell_word_matrix(n: int, b: Braid, exp: Fraction) -> list[list[LaurentQ]]:
    """Specialized cellular action of a braid word on all 3n one-cells."""
    out = _laurent_identity(3 * n)
    for i, s in reversed(b.word.letters):
        out = _laurent_mat_mul(specialized_cell_matrix(n, i, s, exp), out)
    return out


# ---------------------------------------------------------------------------
# one level of iteration


@dataclass
class IteratedFamily:
    """One iteration step: entries replaced by their (1+n)-strand matrices.

    Blocks are stored column-major (column c expands the image of the c-th
    basis vector) with each entry carrying its braid factor, so composition
    is the plain matrix product over the semidirect group ring.  The
    n-dimensional families elsewhere are row-major like the displayed
    matrices; the two conventions are transposes of each other.
    """

    n: int
    form: str
    matrices: list[RingMatrix]

    @property
    def inner_n(self) -> int:
        return 1 + self.n

    def compose(self, a: RingMatrix, b: RingMatrix) -> RingMatrix:
        out = matrix_mul(a, b)
        out.label = a.label * b.label
        return out


def _absorb_label(m: RingMatrix, n_inner: int) -> RingMatrix:
    """Fold the braid label into every entry (free part first, braid second)."""
    label = m.label

    def absorb(e: RingElement) -> RingElement:
        out = RingElement.zero()
        for _, (c, g) in e.terms.items():
            out = out + RingElement.of(free_then_braid(n_inner, g, label), c)
        return out

    out = m.map_entries(absorb)
    out.label = label
    return out


def iterated_entry_block(n: int, form: str, e: RingElement) -> RingMatrix:
    """Image of one matrix entry: a (1+n)-square block over the semidirect ring."""
    inner = burau_from_groupoid(1 + n, form)
    size = 1 + n
    out = RingMatrix.zero(size, size)
    for _, (c, g) in e.terms.items():
        word = embed_semidirect(SemidirectElement.from_free(n, g))
        labeled = inner.word_matrix(word).transpose()
        labeled.label = word
        block = _absorb_label(labeled, 1 + n)
        for r in range(size):
            for col in range(size):
                out.entries[r][col] = out.entries[r][col] + block.entries[r][col] * c
    return out


def iterate_once(family: BurauFamily) -> IteratedFamily:
    """Replace every entry of every generator matrix by its iterated block."""
    n = family.n
    size = 1 + n
    big_mats = []
    for m in family.matrices:
        col_form = m.transpose()
        big = RingMatrix.zero(n * size, n * size, label=embed_braid(m.label))
        for r in range(n):
            for c in range(n):
                block = iterated_entry_block(n, family.form, col_form.entries[r][c])
                for br in range(size):
                    for bc in range(size):
                        big.entries[r * size + br][c * size + bc] = block.entries[br][bc]
        big_mats.append(big)
    return IteratedFamily(n, family.form, big_mats)
