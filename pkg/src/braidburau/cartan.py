"""Cartan data for the finite simple types and pure-braid exponent tables.

The invariant form is normalized so short roots have squared length 2 (the
usual KZ convention); the honest Killing form differs by a global scalar
that callers absorb into the coupling constant.  All values are exact
rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .braids import Braid
from .burau import BurauFamily, SpecializedFamily, _specialize_matrix, specialize_classical
from .laurent import LaurentQ
from .linalg import mat_identity, solve

Gram = tuple[tuple[Fraction, ...], ...]

_VALID_RANKS = {
    "A": lambda r: r >= 1,
    "B": lambda r: r >= 2,
    "C": lambda r: r >= 2,
    "D": lambda r: r >= 3,
    "E": lambda r: r in (6, 7, 8),
    "F": lambda r: r == 4,
    "G": lambda r: r == 2,
}


def _chain_gram(r: int) -> list[list[Fraction]]:
    g = [[Fraction(0)] * r for _ in range(r)]
    for i in range(r):
        g[i][i] = Fraction(2)
        if i + 1 < r:
            g[i][i + 1] = g[i + 1][i] = Fraction(-1)
    return g


def _root_gram(type_: str, r: int) -> Gram:
    if type_ == "A":
        g = _chain_gram(r)
    elif type_ == "B":
        # long chain, short last root; everything scaled so short = 2
        g = [[2 * x for x in row] for row in _chain_gram(r)]
        g[r - 1][r - 1] = Fraction(2)
    elif type_ == "C":
        # short chain, long last root
        g = _chain_gram(r)
        g[r - 1][r - 1] = Fraction(4)
        if r >= 2:
            g[r - 2][r - 1] = g[r - 1][r - 2] = Fraction(-2)
    elif type_ == "D":
        g = _chain_gram(r)
        g[r - 1][r - 2] = g[r - 2][r - 1] = Fraction(0)
        g[r - 1][r - 3] = g[r - 3][r - 1] = Fraction(-1)
    elif type_ == "E":
        # Bourbaki numbering: chain 1-3-4-5-...-r with node 2 attached to 4
        g = [[Fraction(0)] * r for _ in range(r)]
        for i in range(r):
            g[i][i] = Fraction(2)
        edges = [(1, 3), (3, 4), (4, 5), (5, 6)] + ([(6, 7)] if r >= 7 else []) + (
            [(7, 8)] if r == 8 else []
        ) + [(2, 4)]
        for a, b in edges:
            g[a - 1][b - 1] = g[b - 1][a - 1] = Fraction(-1)
    elif type_ == "F":
        g = [
            [Fraction(4), Fraction(-2), Fraction(0), Fraction(0)],
            [Fraction(-2), Fraction(4), Fraction(-2), Fraction(0)],
            [Fraction(0), Fraction(-2), Fraction(2), Fraction(-1)],
            [Fraction(0), Fraction(0), Fraction(-1), Fraction(2)],
        ]
    elif type_ == "G":
        g = [[Fraction(2), Fraction(-3)], [Fraction(-3), Fraction(6)]]
    else:
        raise ValueError(f"unknown type {type_!r}")
    return tuple(tuple(row) for row in g)


@dataclass(frozen=True)
class CartanDatum:
    """Exact Cartan matrix, symmetrizers, and root/weight gram matrices."""

    type: str
    rank: int
    cartan_matrix: tuple[tuple[int, ...], ...]
    d: tuple[Fraction, ...]
    alpha_gram: Gram
    omega_gram: Gram

    def pairing_weight_weight(self, lam: tuple[Fraction, ...], mu: tuple[Fraction, ...]) -> Fraction:
        return sum(
            (lam[i] * mu[j] * self.omega_gram[i][j] for i in range(self.rank) for j in range(self.rank)),
            Fraction(0),
        )

    def pairing_root_weight(self, i: int, lam: tuple[Fraction, ...]) -> Fraction:
        # (alpha_i, omega_j) = d_i delta_ij
        return lam[i - 1] * self.d[i - 1]

    def pairing_root_root(self, i: int, j: int) -> Fraction:
        return self.alpha_gram[i - 1][j - 1]


def _invert_fraction_matrix(m: Gram) -> list[list[Fraction]]:
    r = len(m)
    cols = []
    zero, one = Fraction(0), Fraction(1)
    for j in range(r):
        e = [one if i == j else zero for i in range(r)]
        cols.append(solve([list(row) for row in m], e, zero, one))
    return [[cols[j][i] for j in range(r)] for i in range(r)]


@lru_cache(maxsize=None)
def cartan_datum(type_: str, rank: int) -> CartanDatum:
    """Exact Cartan data; raises on an invalid (type, rank) pair."""
    type_ = type_.upper()
    if type_ not in _VALID_RANKS or not _VALID_RANKS[type_](rank):
        raise ValueError(f"invalid Cartan type/rank pair {type_}{rank}")
    gram = _root_gram(type_, rank)
    d = tuple(gram[i][i] / 2 for i in range(rank))
    cartan = []
    for i in range(rank):
        row = []
        for j in range(rank):
            c = 2 * gram[i][j] / gram[i][i]
            if c.denominator != 1:
                raise ValueError("root gram does not define an integral Cartan matrix")
            row.append(int(c))
        cartan.append(tuple(row))
    cinv = _invert_fraction_matrix(tuple(tuple(Fraction(x) for x in row) for row in cartan))
    omega = tuple(
        tuple(d[j] * cinv[j][i] for j in range(rank)) for i in range(rank)
    )
    return CartanDatum(type_, rank, tuple(cartan), d, gram, omega)


def parse_algebra(text: str) -> CartanDatum:
    """Parse a label like "A1" or "E8"."""
    text = text.strip()
    if len(text) < 2 or not text[1:].isdigit():
        raise ValueError(f"cannot parse algebra label {text!r}")
    return cartan_datum(text[0], int(text[1:]))


def parse_weight(datum: CartanDatum, text: str) -> tuple[Fraction, ...]:
    """Parse a weight like "w1", "2w1+w2" or "1/2w3" over fundamental weights."""
    out = [Fraction(0)] * datum.rank
    for part in text.replace("-", "+-").split("+"):
        part = part.strip()
        if not part:
            continue
        if "w" not in part:
            raise ValueError(f"cannot parse weight term {part!r}")
        coeff_text, idx_text = part.split("w", 1)
        coeff = Fraction(coeff_text) if coeff_text not in ("", "-") else Fraction(-1 if coeff_text == "-" else 1)
        idx = int(idx_text)
        if not 1 <= idx <= datum.rank:
            raise ValueError(f"fundamental-weight index {idx} out of range")
        out[idx - 1] += coeff
    return tuple(out)


def color_map(j: int, kvec: tuple[int, ...]) -> int:
    """Color of the j-th auxiliary point under the partition kvec."""
    m = sum(kvec)
    if not 1 <= j <= m:
        raise ValueError(f"index {j} out of range for m={m}")
    total = 0
    for i, k in enumerate(kvec, start=1):
        total += k
        if j <= total:
            return i
    raise AssertionError("unreachable")


def exponents(
    datum: CartanDatum,
    weights: tuple[tuple[Fraction, ...], ...],
    kvec: tuple[int, ...],
    kappa: Fraction,
) -> tuple[tuple[Fraction, ...], ...]:
    """The symmetric (n+m) x (n+m) table of local-system exponents.

    Base-point pairs take kappa (Lambda_i, Lambda_j); mixed pairs take
    -kappa (alpha_color, Lambda_j); auxiliary pairs take
    kappa (alpha_color, alpha_color).  The diagonal is unused and kept 0.
    """
    if len(kvec) != datum.rank:
        raise ValueError("kvec length must equal the rank")
    if any(k < 0 for k in kvec):
        raise ValueError("kvec entries must be nonnegative")
    for lam in weights:
        if len(lam) != datum.rank:
            raise ValueError("weight dimension must equal the rank")
    n = len(weights)
    m = sum(kvec)
    size = n + m
    table = [[Fraction(0)] * size for _ in range(size)]
    for a in range(size):
        for b in range(size):
            if a == b:
                continue
            i, j = a + 1, b + 1
            if i <= n and j <= n:
                val = datum.pairing_weight_weight(weights[a], weights[b])
            elif i > n and j <= n:
                val = -datum.pairing_root_weight(color_map(i - n, kvec), weights[b])
            elif j > n and i <= n:
                val = -datum.pairing_root_weight(color_map(j - n, kvec), weights[a])
            else:
                val = datum.pairing_root_root(color_map(i - n, kvec), color_map(j - n, kvec))
            table[a][b] = kappa * val
    return tuple(tuple(row) for row in table)


@dataclass(frozen=True)
class LocalSystemSpec:
    """Local-system data for n base points and m auxiliary points."""

    datum: CartanDatum
    weights: tuple[tuple[Fraction, ...], ...]
    kvec: tuple[int, ...]
    kappa: Fraction
    table: tuple[tuple[Fraction, ...], ...]

    @property
    def n(self) -> int:
        return len(self.weights)

    @property
    def m(self) -> int:
        return sum(self.kvec)

    def exponent(self, i: int, j: int) -> Fraction:
        return self.table[i - 1][j - 1]

    def fiber_exponent(self, j: int) -> Fraction:
        """Exponent of the loop of the single fiber point around puncture j."""
        if self.m != 1:
            raise ValueError("fiber exponents require m = 1")
        return self.exponent(self.n + 1, j)

    def equal_weights(self) -> bool:
        return all(w == self.weights[0] for w in self.weights)


def make_local_system(
    datum: CartanDatum,
    weights: tuple[tuple[Fraction, ...], ...],
    kvec: tuple[int, ...],
    kappa: Fraction,
) -> LocalSystemSpec:
    return LocalSystemSpec(datum, weights, kvec, kappa, exponents(datum, weights, kvec, kappa))


def specialize_local(
    family: BurauFamily,
    spec: LocalSystemSpec,
    scalar_exp: Fraction | int = 0,
) -> SpecializedFamily:
    """Specialize a braid-valued family along a permutation-invariant local
    system with one fiber point: f_j goes to q^(a_{j,n+1}) and every braid
    generator to the unit q^scalar_exp."""
    if spec.m != 1:
        raise ValueError("local specialization requires m = 1")
    if spec.n != family.n:
        raise ValueError("local system and family disagree on the number of punctures")
    if not spec.equal_weights():
        raise ValueError("braid invariance requires all highest weights equal")
    exps = {j: spec.fiber_exponent(j) for j in range(1, family.n + 1)}
    scalar = LaurentQ.monomial(1, Fraction(scalar_exp))
    mats = [_specialize_matrix(m, exps, scalar) for m in family.matrices]
    return SpecializedFamily(family.n, family.form, mats, exps, Fraction(scalar_exp), "q")
