"""Univariate polynomials and rational functions over Q, plus a small
sparse multivariate polynomial type.

Everything is exact: coefficients are ``fractions.Fraction``.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence


def _q(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class Poly:
    """Dense univariate polynomial, coefficients lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_q(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def const(cls, c) -> "Poly":
        return cls([c])

    @classmethod
    def x(cls) -> "Poly":
        return cls([0, 1])

    @classmethod
    def monomial(cls, k: int, c=1) -> "Poly":
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def valuation(self) -> int:
        """Order of vanishing at 0; raises on the zero polynomial."""
        for i, c in enumerate(self.coeffs):
            if c != 0:
                return i
        raise ValueError("valuation of the zero polynomial")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            other = _lift(other)
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({[str(c) for c in self.coeffs]})"

    def __neg__(self) -> "Poly":
        return Poly(-c for c in self.coeffs)

    def __add__(self, other) -> "Poly":
        other = _lift(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __sub__(self, other) -> "Poly":
        return self + (-_lift(other))

    def __rsub__(self, other) -> "Poly":
        return _lift(other) - self

    def __mul__(self, other) -> "Poly":
        if isinstance(other, RatFunc):
            return NotImplemented
        other = _lift(other)
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        out = Poly([1])
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __truediv__(self, other):
        if isinstance(other, Poly):
            return RatFunc(self, other)
        return Poly(c / _q(other) for c in self.coeffs)

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lead = other.lead()
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        for k in range(len(rem) - dq - 1, -1, -1):
            c = rem[k + dq] / lead
            quot[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return Poly(quot), Poly(rem[:dq])

    def __floordiv__(self, other: "Poly") -> "Poly":
        return self.divmod(_lift(other))[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return self.divmod(_lift(other))[1]

    def exact_div(self, other: "Poly") -> "Poly":
        q, r = self.divmod(other)
        if r:
            raise ArithmeticError("polynomial division is not exact")
        return q

    def monic(self) -> "Poly":
        if not self.coeffs:
            return self
        return self / self.lead()

    def deriv(self) -> "Poly":
        return Poly(i * c for i, c in enumerate(self.coeffs) if i)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def shift_down(self, k: int) -> "Poly":
        """Divide by x**k, which must be exact."""
        if any(c != 0 for c in self.coeffs[:k]):
            raise ArithmeticError("not divisible by x**k")
        return Poly(self.coeffs[k:])

    def to_json(self) -> list[str]:
        return [fmt_scalar(c) for c in self.coeffs]


def _lift(x) -> Poly:
    return x if isinstance(x, Poly) else Poly([x])


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd (zero if both are zero)."""
    while b:
        a, b = b, a % b
    return a.monic()


def fmt_scalar(c: Fraction) -> str:
    c = _q(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


class RatFunc:
    """Quotient of two polynomials in one parameter, kept reduced with a
    monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = _lift(num)
        den = Poly([1]) if den is None else _lift(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            self.num, self.den = Poly(), Poly([1])
            return
        g = poly_gcd(num, den)
        if g.degree > 0:
            num, den = num.exact_div(g), den.exact_div(g)
        lead = den.lead()
        self.num, self.den = num / lead, den / lead

    @classmethod
    def t(cls) -> "RatFunc":
        return cls(Poly.x())

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def __eq__(self, other) -> bool:
        other = _liftr(other)
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"RatFunc({self.num!r}, {self.den!r})"

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.num, self.den)

    def __add__(self, other) -> "RatFunc":
        other = _liftr(other)
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other) -> "RatFunc":
        return self + (-_liftr(other))

    def __rsub__(self, other) -> "RatFunc":
        return _liftr(other) - self

    def __mul__(self, other) -> "RatFunc":
        other = _liftr(other)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RatFunc":
        other = _liftr(other)
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> "RatFunc":
        return _liftr(other) / self

    def __pow__(self, k: int) -> "RatFunc":
        if k < 0:
            return RatFunc(self.den ** (-k), self.num ** (-k))
        return RatFunc(self.num ** k, self.den ** k)

    def valuation(self) -> int:
        """ord_0(num) - ord_0(den)."""
        return self.num.valuation() - self.den.valuation()

    def __call__(self, x):
        d = self.den(x)
        if d == 0:
            raise ZeroDivisionError("pole at evaluation point")
        return _q(self.num(x)) / d

    def value_at_zero(self) -> Fraction:
        return self(0)

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, obj) -> "RatFunc":
        from .jsonio import parse_scalar

        if isinstance(obj, dict):
            return cls(Poly(parse_scalar(c) for c in obj["num"]),
                       Poly(parse_scalar(c) for c in obj.get("den", ["1"])))
        return cls(Poly([parse_scalar(obj)]))


def _liftr(x) -> RatFunc:
    if isinstance(x, RatFunc):
        return x
    return RatFunc(_lift(x))


# -- gcd towers -----------------------------------------------------------

def gcd_tower(f: Poly) -> list[Poly]:
    """g_0 = f, g_{k+1} = gcd(g_k, g_k')  until a constant is reached."""
    tower = [f.monic()]
    while tower[-1].degree > 0:
        g = tower[-1]
        tower.append(poly_gcd(g, g.deriv()))
    return tower


def multiplicity_partition(f: Poly) -> list[int]:
    """Multiset of root multiplicities of ``f`` (over the algebraic closure),
    sorted decreasingly. Computed from degrees in the gcd tower only."""
    if f.is_zero():
        raise ValueError("zero polynomial")
    tower = gcd_tower(f)
    at_least = [tower[k - 1].degree - tower[k].degree for k in range(1, len(tower))]
    parts: list[int] = []
    for k, c in enumerate(at_least, start=1):
        nxt = at_least[k] if k < len(at_least) else 0
        parts.extend([k] * (c - nxt))
    return sorted(parts, reverse=True)


def squarefree_factors(f: Poly) -> dict[int, Poly]:
    """Yun decomposition: {k: s_k} with f = lead * prod s_k**k, s_k squarefree,
    pairwise coprime. Only nonconstant factors are returned."""
    f = f.monic()
    out: dict[int, Poly] = {}
    if f.degree <= 0:
        return out
    a = poly_gcd(f, f.deriv())
    b = f.exact_div(a)
    c = f.deriv().exact_div(a) if a.degree >= 0 else f.deriv()
    d = c - b.deriv()
    k = 1
    while b.degree > 0:
        s = poly_gcd(b, d)
        if s.degree > 0:
            out[k] = s
        b = b.exact_div(s)
        c = d.exact_div(s)
        d = c - b.deriv()
        k += 1
    return out


def rational_roots(f: Poly) -> list[Fraction]:
    """Distinct rational roots of f via the rational root test."""
    if f.is_zero():
        raise ValueError("zero polynomial")
    from math import lcm

    roots = []
    if f.coeffs[0] == 0:
        roots.append(Fraction(0))
        f = f.shift_down(f.valuation())
    den = lcm(*(c.denominator for c in f.coeffs))
    ints = [int(c * den) for c in f.coeffs]
    a0, an = abs(ints[0]), abs(ints[-1])
    for p in _divisors(a0):
        for q in _divisors(an):
            for r in (Fraction(p, q), Fraction(-p, q)):
                if r not in roots and f(r) == 0:
                    roots.append(r)
    return sorted(roots)


def _divisors(m: int) -> list[int]:
    out = []
    i = 1
    while i * i <= m:
        if m % i == 0:
            out.append(i)
            if i * i != m:
                out.append(m // i)
        i += 1
    return out


# -- sparse multivariate polynomials ----------------------------------------

class MPoly:
    """Sparse polynomial in ``nvars`` variables: {exponent tuple: Fraction}."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: dict | None = None):
        self.nvars = nvars
        self.terms = {m: _q(c) for m, c in (terms or {}).items() if c != 0}

    @classmethod
    def var(cls, nvars: int, i: int) -> "MPoly":
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): 1})

    @classmethod
    def const(cls, nvars: int, c) -> "MPoly":
        return cls(nvars, {(0,) * nvars: c})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        other = self._lift(other)
        return self.terms == other.terms

    def __repr__(self) -> str:
        return f"MPoly({self.nvars}, {self.terms})"

    def _lift(self, x) -> "MPoly":
        return x if isinstance(x, MPoly) else MPoly.const(self.nvars, x)

    def __neg__(self) -> "MPoly":
        return MPoly(self.nvars, {m: -c for m, c in self.terms.items()})

    def __add__(self, other) -> "MPoly":
        other = self._lift(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return MPoly(self.nvars, out)

    __radd__ = __add__

    def __sub__(self, other) -> "MPoly":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "MPoly":
        return self._lift(other) - self

    def __mul__(self, other) -> "MPoly":
        other = self._lift(other)
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return MPoly(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "MPoly":
        out = MPoly.const(self.nvars, 1)
        for _ in range(k):
            out = out * self
        return out

    def truncate(self, max_degree: int) -> "MPoly":
        return MPoly(self.nvars, {m: c for m, c in self.terms.items() if sum(m) <= max_degree})

    def homogeneous_part(self, degree: int) -> "MPoly":
        return MPoly(self.nvars, {m: c for m, c in self.terms.items() if sum(m) == degree})

    def coefficient(self, exps: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(exps), Fraction(0))

    def __call__(self, point: Sequence) -> Fraction:
        acc = Fraction(0)
        for m, c in self.terms.items():
            v = c
            for x, e in zip(point, m):
                if e:
                    v *= _q(x) ** e
            acc += v
        return acc
