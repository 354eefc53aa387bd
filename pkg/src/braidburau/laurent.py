"""Integer combinations of q^r with exact rational exponents, and their
fraction field.

LaurentQ is the commutative ring of finite sums c_r q^r with integer
coefficients and rational exponents.  RatFn is its fraction field; gcd
cancellation clears exponent denominators into an ordinary integer-exponent
polynomial (in q^(1/D) for a common D), takes the primitive polynomial gcd
there, and divides it back out, so all arithmetic stays exact.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable


class LaurentQ:
    """Finite sum of integer multiples of q^r, r rational."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[Fraction, int] | None = None):
        self.terms = {Fraction(e): int(c) for e, c in (terms or {}).items() if c != 0}

    @staticmethod
    def zero() -> "LaurentQ":
        return LaurentQ()

    @staticmethod
    def one() -> "LaurentQ":
        return LaurentQ({Fraction(0): 1})

    @staticmethod
    def monomial(coeff: int = 1, exp: Fraction | int = 0) -> "LaurentQ":
        return LaurentQ({Fraction(exp): coeff})

    @staticmethod
    def integer(c: int) -> "LaurentQ":
        return LaurentQ({Fraction(0): c})

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {Fraction(0): 1}

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def monomial_inverse(self) -> "LaurentQ":
        """Inverse of a +-q^r monomial (a unit of the ring)."""
        if len(self.terms) != 1:
            raise ValueError("only monomials are units here")
        ((e, c),) = self.terms.items()
        if c not in (1, -1):
            raise ValueError(f"monomial coefficient {c} is not a unit over the integers")
        return LaurentQ({-e: c})

    def __add__(self, other: "LaurentQ") -> "LaurentQ":
        if not isinstance(other, LaurentQ):
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s == 0:
                out.pop(e, None)
            else:
                out[e] = s
        return LaurentQ(out)

    def __neg__(self) -> "LaurentQ":
        return LaurentQ({e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "LaurentQ") -> "LaurentQ":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentQ({e: c * other for e, c in self.terms.items()} if other else {})
        if not isinstance(other, LaurentQ):
            return NotImplemented
        out: dict[Fraction, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                s = out.get(e, 0) + c1 * c2
                if s == 0:
                    out.pop(e, None)
                else:
                    out[e] = s
        return LaurentQ(out)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, k: int) -> "LaurentQ":
        if k < 0:
            return self.monomial_inverse() ** (-k)
        out = LaurentQ.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.terms == ({Fraction(0): other} if other else {})
        if not isinstance(other, LaurentQ):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        raise TypeError("LaurentQ is not hashable")

    def items_sorted(self) -> list[tuple[Fraction, int]]:
        return sorted(self.terms.items(), key=lambda t: t[0], reverse=True)

    def min_exp(self) -> Fraction:
        return min(self.terms) if self.terms else Fraction(0)

    def max_exp(self) -> Fraction:
        return max(self.terms) if self.terms else Fraction(0)

    def content(self) -> int:
        out = 0
        for c in self.terms.values():
            out = gcd(out, abs(c))
        return out

    def substitute_exponents(self, scale: Fraction) -> "LaurentQ":
        """q^r -> q^(scale * r); the ring map induced by q -> q^scale."""
        return LaurentQ({e * scale: c for e, c in self.terms.items()})

    def format(self, symbol: str = "q") -> str:
        if not self.terms:
            return "0"
        parts: list[tuple[str, str]] = []
        for e, c in self.items_sorted():
            if e == 0:
                body = str(abs(c))
            else:
                power = symbol if e == 1 else f"{symbol}^({e})" if e.denominator != 1 or e < 0 else f"{symbol}^{e}"
                body = power if abs(c) == 1 else f"{abs(c)} {power}"
            parts.append(("-" if c < 0 else "+", body))
        sign0, body0 = parts[0]
        out = ("-" if sign0 == "-" else "") + body0
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"LaurentQ({self.format()})"


# ---------------------------------------------------------------------------
# integer-polynomial plumbing for gcd cancellation


def _exponent_denominator(xs: Iterable[LaurentQ]) -> int:
    d = 1
    for x in xs:
        for e in x.terms:
            d = lcm(d, e.denominator)
    return d


def _to_int_poly(x: LaurentQ, denom: int) -> tuple[list[int], Fraction]:
    """Dense coefficient list in u = q^(1/denom), plus the exponent shift."""
    shift = x.min_exp()
    degs = {int((e - shift) * denom): c for e, c in x.terms.items()}
    top = max(degs) if degs else 0
    return [degs.get(i, 0) for i in range(top + 1)], shift


def _from_int_poly(coeffs: list[int], denom: int, shift: Fraction) -> LaurentQ:
    return LaurentQ({shift + Fraction(i, denom): c for i, c in enumerate(coeffs) if c})


def _poly_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = list(a)
    out = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and any(a):
        while a and a[-1] == 0:
            a.pop()
        if len(a) < len(b):
            break
        q = a[-1] / b[-1]
        d = len(a) - len(b)
        out[d] = q
        for i, c in enumerate(b):
            a[i + d] -= q * c
        while a and a[-1] == 0:
            a.pop()
    return out, a


def _primitive(coeffs: list[Fraction]) -> list[int]:
    den = 1
    for c in coeffs:
        den = lcm(den, c.denominator)
    ints = [int(c * den) for c in coeffs]
    g = 0
    for c in ints:
        g = gcd(g, abs(c))
    g = g or 1
    ints = [c // g for c in ints]
    if ints and ints[-1] < 0:
        ints = [-c for c in ints]
    return ints


def _poly_gcd(p: list[int], q: list[int]) -> list[int]:
    a = [Fraction(c) for c in p]
    b = [Fraction(c) for c in q]
    while any(b):
        _, r = _poly_divmod(a, b)
        a, b = b, r
    return _primitive(a)


def _poly_divexact(a: list[int], g: list[int]) -> list[int]:
    q, r = _poly_divmod([Fraction(c) for c in a], [Fraction(c) for c in g])
    if any(r):
        raise ValueError("inexact polynomial division")
    out = []
    for c in q:
        if c.denominator != 1:
            raise ValueError("inexact polynomial division")
        out.append(int(c))
    return out


def laurent_divexact(a: LaurentQ, g: LaurentQ) -> LaurentQ:
    """Exact division a / g in the Laurent ring."""
    if g.is_zero():
        raise ZeroDivisionError("division by the zero Laurent element")
    if a.is_zero():
        return LaurentQ.zero()
    denom = _exponent_denominator((a, g))
    pa, sa = _to_int_poly(a, denom)
    pg, sg = _to_int_poly(g, denom)
    return _from_int_poly(_poly_divexact(pa, pg), denom, sa - sg)


def laurent_gcd(a: LaurentQ, b: LaurentQ) -> LaurentQ:
    """A gcd in the Laurent ring, normalized primitive with min exponent 0."""
    if a.is_zero():
        return _normal_gcd(b)
    if b.is_zero():
        return _normal_gcd(a)
    denom = _exponent_denominator((a, b))
    pa, _ = _to_int_poly(a, denom)
    pb, _ = _to_int_poly(b, denom)
    g = _poly_gcd(pa, pb)
    ca, cb = a.content(), b.content()
    return _from_int_poly([c * gcd(ca, cb) for c in g], denom, Fraction(0))


def _normal_gcd(x: LaurentQ) -> LaurentQ:
    if x.is_zero():
        return LaurentQ.zero()
    shift = x.min_exp()
    out = LaurentQ({e - shift: c for e, c in x.terms.items()})
    lead = out.terms[out.max_exp()]
    return -out if lead < 0 else out


class RatFn:
    """An exact rational function num/den over the Laurent ring."""

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentQ, den: LaurentQ | None = None, _normalized: bool = False):
        den = LaurentQ.one() if den is None else den
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            num, den = LaurentQ.zero(), LaurentQ.one()
        elif not _normalized:
            g = laurent_gcd(num, den)
            if not g.is_one():
                num = laurent_divexact(num, g)
                den = laurent_divexact(den, g)
            # keep denominators tidy: positive leading coefficient, monomial shift absorbed
            shift = den.min_exp()
            if shift != 0:
                num = num * LaurentQ.monomial(1, -shift)
                den = den * LaurentQ.monomial(1, -shift)
            if den.terms[den.max_exp()] < 0:
                num, den = -num, -den
        self.num = num
        self.den = den

    @staticmethod
    def zero() -> "RatFn":
        return RatFn(LaurentQ.zero(), LaurentQ.one(), _normalized=True)

    @staticmethod
    def one() -> "RatFn":
        return RatFn(LaurentQ.one(), LaurentQ.one(), _normalized=True)

    @staticmethod
    def of(x: LaurentQ) -> "RatFn":
        return RatFn(x, LaurentQ.one(), _normalized=True)

    @staticmethod
    def integer(c: int) -> "RatFn":
        return RatFn(LaurentQ.integer(c), LaurentQ.one(), _normalized=True)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFn(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RatFn":
        return RatFn(-self.num, self.den, _normalized=True)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFn(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFn(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        raise TypeError("RatFn is not hashable")

    def format(self, symbol: str = "q") -> str:
        if self.den.is_one():
            return self.num.format(symbol)
        return f"({self.num.format(symbol)})/({self.den.format(symbol)})"

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"RatFn({self.format()})"


def _coerce(x) -> "RatFn":
    if isinstance(x, RatFn):
        return x
    if isinstance(x, LaurentQ):
        return RatFn.of(x)
    if isinstance(x, int):
        return RatFn.integer(x)
    return NotImplemented
