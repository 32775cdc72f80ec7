"""Exact rational generating functions with integer coefficients.

No polynomial gcd is ever taken: rational functions are compared by
cross-multiplication, and series extraction only cancels common powers of x.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union


class IntPolynomial:
    """Polynomial over the integers; ``coeffs[i]`` is the coefficient of x**i."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[int] = ()):
        c = [int(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = IntPolynomial([other])
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other) -> IntPolynomial:
        other = _poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial([self[i] + other[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial([-a for a in self.coeffs])

    def __sub__(self, other) -> IntPolynomial:
        return self + (-_poly(other))

    def __rsub__(self, other) -> IntPolynomial:
        return _poly(other) - self

    def __mul__(self, other) -> IntPolynomial:
        other = _poly(other)
        if self.is_zero() or other.is_zero():
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> IntPolynomial:
        out = IntPolynomial([1])
        for _ in range(k):
            out = out * self
        return out

    def __call__(self, x: int) -> int:
        acc = 0
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    def low_degree(self) -> int:
        """Exponent of the lowest non-zero term (the x-adic valuation)."""
        for i, a in enumerate(self.coeffs):
            if a:
                return i
        raise ValueError("zero polynomial has no lowest term")

    def shift_down(self, k: int) -> IntPolynomial:
        return IntPolynomial(self.coeffs[k:])

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if mono and abs(a) == 1:
                body = mono
            else:
                body = f"{abs(a)}{'*' if mono else ''}{mono}"
            terms.append(("-" if a < 0 else "+", body))
        sign, body = terms[0]
        head = ("-" if sign == "-" else "") + body
        return head + "".join(f" {s} {b}" for s, b in terms[1:])


def _poly(v) -> IntPolynomial:
    if isinstance(v, IntPolynomial):
        return v
    if isinstance(v, int):
        return IntPolynomial([v])
    return IntPolynomial(v)


Operand = Union["RationalGF", IntPolynomial, int]


@dataclass(frozen=True, eq=False)
class RationalGF:
    num: IntPolynomial
    den: IntPolynomial

    def __post_init__(self):
        if self.den.is_zero():
            raise ZeroDivisionError("zero denominator")

    def __add__(self, other: Operand) -> RationalGF:
        o = rat(other)
        return RationalGF(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self) -> RationalGF:
        return RationalGF(-self.num, self.den)

    def __sub__(self, other: Operand) -> RationalGF:
        return self + (-rat(other))

    def __rsub__(self, other: Operand) -> RationalGF:
        return rat(other) - self

    def __mul__(self, other: Operand) -> RationalGF:
        o = rat(other)
        return RationalGF(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other: Operand) -> RationalGF:
        o = rat(other)
        if o.num.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RationalGF(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other: Operand) -> RationalGF:
        return rat(other) / self

    def __pow__(self, k: int) -> RationalGF:
        return RationalGF(self.num ** k, self.den ** k)

    def __eq__(self, other) -> bool:
        if not isinstance(other, (RationalGF, IntPolynomial, int)):
            return NotImplemented
        return equal(self, rat(other))

    __hash__ = None

    def __call__(self, inner: Operand) -> RationalGF:
        return compose(self, rat(inner))

    def __str__(self) -> str:
        return f"({self.num}) / ({self.den})"


def rat(v: Operand) -> RationalGF:
    if isinstance(v, RationalGF):
        return v
    return RationalGF(_poly(v), IntPolynomial([1]))


def add(r1: Operand, r2: Operand) -> RationalGF:
    return rat(r1) + rat(r2)


def sub(r1: Operand, r2: Operand) -> RationalGF:
    return rat(r1) - rat(r2)


def mul(r1: Operand, r2: Operand) -> RationalGF:
    return rat(r1) * rat(r2)


def div(r1: Operand, r2: Operand) -> RationalGF:
    return rat(r1) / rat(r2)


def equal(r1: Operand, r2: Operand) -> bool:
    a, b = rat(r1), rat(r2)
    return a.num * b.den == b.num * a.den


def compose(outer: Operand, inner: Operand) -> RationalGF:
    """outer(inner(x)), for inner with zero constant term."""
    outer, inner = rat(outer), rat(inner)
    if inner.num[0] != 0:
        raise ValueError("inner function must vanish at x = 0")
    if inner.den[0] == 0:
        raise ValueError("inner function must be analytic at x = 0")
    p, q = inner.num, inner.den
    k = max(outer.num.degree, outer.den.degree, 0)
    p_pows = [IntPolynomial([1])]
    q_pows = [IntPolynomial([1])]
    for _ in range(k):
        p_pows.append(p_pows[-1] * p)
        q_pows.append(q_pows[-1] * q)

    def homogenize(poly: IntPolynomial) -> IntPolynomial:
        acc = IntPolynomial()
        for i, a in enumerate(poly.coeffs):
            if a:
                acc = acc + a * p_pows[i] * q_pows[k - i]
        return acc

    return RationalGF(homogenize(outer.num), homogenize(outer.den))


def series(r: Operand, n: int) -> list[int]:
    """Coefficients of x**0 .. x**n of the power series of r."""
    r = rat(r)
    if n < 0:
        raise ValueError("n must be non-negative")
    num, den = r.num, r.den
    if num.is_zero():
        return [0] * (n + 1)
    shift = min(num.low_degree(), den.low_degree())
    num, den = num.shift_down(shift), den.shift_down(shift)
    d0 = den[0]
    if d0 == 0:
        raise ValueError("denominator vanishes at x = 0; no power series")
    out: list[int] = []
    dc = den.coeffs
    for k in range(n + 1):
        acc = num[k]
        for j in range(1, min(k, len(dc) - 1) + 1):
            acc -= dc[j] * out[k - j]
        q, rem = divmod(acc, d0)
        if rem:
            raise ValueError("series has non-integer coefficients")
        out.append(q)
    return out


# ------------------------------------------------------------- formula library

X = rat(IntPolynomial([0, 1]))
ONE = rat(1)


def _p(*coeffs: int) -> RationalGF:
    return rat(IntPolynomial(coeffs))


_Q = _p(1, -3, 1)  # 1 - 3x + x^2


def _closed_forms() -> dict[str, RationalGF]:
    x = X
    return {
        "d": x / _p(1, -1),
        "e": x * _p(1, -1) / _Q,
        "e_notskew": x * _p(1, -1) ** 2 / _Q,
        "f_skew": x ** 2 * _p(1, -1) ** 3 / _Q ** 2,
        "s1": x ** 4 / (_p(1, -2) * _p(1, 1)),
        "s2": x ** 6 / _p(1, -2),
        "s3": x ** 6 / _p(1, -2),
        "s4": x ** 8 * _p(1, 1) / _p(1, -2),
        "f1": x ** 4 * _p(1, -1) ** 2 / (_p(1, -3) * _Q ** 2),
        "f2": x ** 6 / (_p(1, -3) * _Q ** 2),
        "f3": x ** 6 / (_p(1, -3) * _Q ** 2),
        "f4": x ** 8 / (_p(1, -3) * _p(1, -1) ** 2 * _Q ** 2),
        "sporadic": 2 * x ** 5 / _Q ** 2,
        "s": 2 * x ** 4 * _p(1, 1, 1, 0, 1, 2, 1) / (_p(1, -2) * _p(1, 1)),
        "f": _p(0, 1, -11, 51, -127, 186, -165, 87, -23, 3)
             / (_p(1, -3) * _p(1, -1) ** 4 * _Q ** 2),
    }


NAMED: dict[str, RationalGF] = _closed_forms()
GF_NAMES = tuple(NAMED)


def named(name: str) -> RationalGF:
    try:
        return NAMED[name]
    except KeyError:
        raise KeyError(f"unknown generating function {name!r}; "
                       f"choose from {', '.join(GF_NAMES)}") from None


def solve_affine(a: Operand, b: Operand) -> RationalGF:
    """The solution g of g = a + b*g."""
    return rat(a) / (ONE - rat(b))


@dataclass(frozen=True)
class Pipeline:
    """Every intermediate of the derivation of f from its parts."""

    e_notskew: RationalGF
    f_skew: RationalGF
    sporadic: RationalGF
    f_types: tuple[RationalGF, RationalGF, RationalGF, RationalGF]
    s: RationalGF
    f_plus: RationalGF
    f: RationalGF


def pipeline(lookup=named) -> Pipeline:
    """Assemble f without using its closed form.

    ``lookup`` supplies the base series d, e and s1..s4; it is a parameter so
    that the verification harness can be pointed at a tampered library.
    """
    x = X
    d, e = lookup("d"), lookup("e")
    s_types = [lookup(f"s{k}") for k in range(1, 5)]

    # e_notskew = x + x*e + (e - e_notskew)*d
    e_notskew = solve_affine(x + x * e + e * d, -d)
    f_skew = e_notskew * e
    sporadic = 2 * x * e ** 2 * d ** 2
    corrections = [e ** 2 / d ** 2, x * e ** 2 / d ** 3, x * e ** 2 / d ** 3,
                   x ** 2 * e ** 2 / d ** 4]
    f_types = tuple(compose(s_k, d) * c for s_k, c in zip(s_types, corrections))
    s = 2 * x ** 5 + 2 * (s_types[0] + s_types[1] + s_types[2] + s_types[3])

    # f_plus = x*f + (f - f_plus - x)*d, i.e. f_plus = p + q*f with
    p = solve_affine(-x * d, -d)
    q = (x + d) / (ONE + d)
    # f = x + f_plus + f_skew + sporadic + 2*(f1+f2+f3+f4)
    rest = x + f_skew + sporadic + 2 * (f_types[0] + f_types[1] + f_types[2] + f_types[3])
    f = solve_affine(rest + p, q)
    f_plus = p + q * f
    return Pipeline(e_notskew, f_skew, sporadic, f_types, s, f_plus, f)


def pipeline_f(lookup=named) -> RationalGF:
    return pipeline(lookup).f
