"""Exact bivariate and univariate polynomials over Q, plus canonical line forms.

Monomials x^a y^b are indexed in graded-lex order: 1, x, y, x^2, xy, y^2, ...
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, gcd, lcm
from typing import Mapping, Sequence

from .exact import Q


@lru_cache(maxsize=None)
def monomials(d: int) -> tuple:
    """Exponent pairs (a, b) with a + b <= d in graded-lex order."""
    if d < 0:
        return ()
    return tuple((t - j, j) for t in range(d + 1) for j in range(t + 1))


def dim_poly(d: int) -> int:
    """dim of the space of bivariate polynomials of total degree <= d (0 for d < 0)."""
    return comb(d + 2, 2) if d >= 0 else 0


def _clean(terms):
    return {k: v for k, v in terms.items() if v}


class BivariatePoly:
    """Immutable polynomial stored as ``{(a, b): Fraction}`` with a degree bound."""

    __slots__ = ("terms", "degree_bound", "_hash")

    def __init__(self, terms: Mapping | None = None, degree_bound: int | None = None):
        t = _clean({k: Q(v) for k, v in (terms or {}).items()})
        deg = max((a + b for a, b in t), default=0)
        if degree_bound is None:
            degree_bound = deg
        elif deg > degree_bound:
            raise ValueError(f"term of degree {deg} exceeds bound {degree_bound}")
        self.terms = t
        self.degree_bound = degree_bound
        self._hash = None

    # construction ------------------------------------------------------
    @classmethod
    def constant(cls, c, degree_bound: int = 0) -> "BivariatePoly":
        return cls({(0, 0): c}, degree_bound)

    @classmethod
    def monomial(cls, a: int, b: int, coeff=1) -> "BivariatePoly":
        return cls({(a, b): coeff})

    @classmethod
    def x(cls):
        return cls({(1, 0): 1})

    @classmethod
    def y(cls):
        return cls({(0, 1): 1})

    @classmethod
    def from_vector(cls, coeffs: Sequence, d: int) -> "BivariatePoly":
        mons = monomials(d)
        if len(coeffs) != len(mons):
            raise ValueError(f"expected {len(mons)} coefficients for degree {d}")
        return cls(dict(zip(mons, coeffs)), d)

    def to_vector(self, d: int | None = None) -> tuple:
        d = self.degree_bound if d is None else d
        if self.degree() > d:
            raise ValueError("polynomial degree exceeds requested bound")
        return tuple(self.terms.get(m, Fraction(0)) for m in monomials(d))

    # inspection --------------------------------------------------------
    def degree(self) -> int:
        """Actual total degree; -1 for the zero polynomial."""
        return max((a + b for a, b in self.terms), default=-1)

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, a: int, b: int) -> Fraction:
        return self.terms.get((a, b), Fraction(0))

    def __eq__(self, other):
        if isinstance(other, BivariatePoly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == _clean({(0, 0): Fraction(other)})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for (a, b) in sorted(self.terms, key=lambda m: (m[0] + m[1], -m[0])):
            c = self.terms[(a, b)]
            mon = "*".join(s for s in (("x" if a == 1 else f"x^{a}") if a else "",
                                       ("y" if b == 1 else f"y^{b}") if b else "") if s)
            parts.append(f"({c})" + (f"*{mon}" if mon else ""))
        return " + ".join(parts)

    # arithmetic --------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, BivariatePoly):
            return other
        return BivariatePoly.constant(other)

    def __add__(self, other):
        other = self._coerce(other)
        t = dict(self.terms)
        for k, v in other.terms.items():
            t[k] = t.get(k, 0) + v
        return BivariatePoly(t, max(self.degree_bound, other.degree_bound))

    __radd__ = __add__

    def __neg__(self):
        return BivariatePoly({k: -v for k, v in self.terms.items()}, self.degree_bound)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, BivariatePoly):
            c = Q(other)
            return BivariatePoly({k: v * c for k, v in self.terms.items()}, self.degree_bound)
        t: dict = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                k = (a1 + a2, b1 + b2)
                t[k] = t.get(k, 0) + c1 * c2
        return BivariatePoly(t, self.degree_bound + other.degree_bound)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = BivariatePoly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def with_bound(self, d: int) -> "BivariatePoly":
        return BivariatePoly(self.terms, d)

    # calculus ----------------------------------------------------------
    def __call__(self, x, y) -> Fraction:
        x, y = Q(x), Q(y)
        return sum((c * x ** a * y ** b for (a, b), c in self.terms.items()), Fraction(0))

    def evaluate_float(self, x, y):
        """Floating evaluation, accepts numpy arrays.  Render-time use only."""
        total = 0.0
        for (a, b), c in self.terms.items():
            total = total + float(c) * x ** a * y ** b
        return total

    def dx(self) -> "BivariatePoly":
        return BivariatePoly({(a - 1, b): c * a for (a, b), c in self.terms.items() if a},
                             max(self.degree_bound - 1, 0))

    def dy(self) -> "BivariatePoly":
        return BivariatePoly({(a, b - 1): c * b for (a, b), c in self.terms.items() if b},
                             max(self.degree_bound - 1, 0))

    def compose(self, X: "BivariatePoly", Y: "BivariatePoly") -> "BivariatePoly":
        """Substitute x -> X(x, y), y -> Y(x, y)."""
        xp = [BivariatePoly.constant(1)]
        yp = [BivariatePoly.constant(1)]
        deg = max(self.degree(), 0)
        for _ in range(deg):
            xp.append(xp[-1] * X)
            yp.append(yp[-1] * Y)
        out = BivariatePoly()
        for (a, b), c in self.terms.items():
            out = out + xp[a] * yp[b] * c
        return out


@dataclass(frozen=True)
class UnivariatePoly:
    coeffs: tuple  # ascending powers, Fractions

    @classmethod
    def of(cls, coeffs: Sequence) -> "UnivariatePoly":
        c = [Q(v) for v in coeffs]
        while c and c[-1] == 0:
            c.pop()
        return cls(tuple(c))

    @property
    def degree_bound(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "UnivariatePoly") -> "UnivariatePoly":
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return UnivariatePoly.of([x + y for x, y in zip(a, b)])

    def __mul__(self, other) -> "UnivariatePoly":
        if not isinstance(other, UnivariatePoly):
            return UnivariatePoly.of([c * Q(other) for c in self.coeffs])
        if not self.coeffs or not other.coeffs:
            return UnivariatePoly(())
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UnivariatePoly.of(out)

    __rmul__ = __mul__

    def derivative(self, r: int = 1) -> "UnivariatePoly":
        c = list(self.coeffs)
        for _ in range(r):
            c = [k * c[k] for k in range(1, len(c))]
        return UnivariatePoly.of(c)

    def __call__(self, t) -> Fraction:
        t = Q(t)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def padded(self, n: int) -> tuple:
        if len(self.coeffs) > n:
            raise ValueError("degree exceeds padding length")
        return self.coeffs + (Fraction(0),) * (n - len(self.coeffs))


@dataclass(frozen=True)
class LineForm:
    """Canonical line a*x + b*y + c = 0 with coprime integer coefficients.

    The leading nonzero of (a, b, c) is positive, so collinear edges share the
    same object.  The sign also fixes the positive side used for jumps.
    """

    a: int
    b: int
    c: int

    @classmethod
    def canonical(cls, a, b, c) -> "LineForm":
        a, b, c = Q(a), Q(b), Q(c)
        if a == 0 and b == 0:
            raise ValueError("degenerate line: (a, b) = (0, 0)")
        den = lcm(a.denominator, b.denominator, c.denominator)
        ia, ib, ic = int(a * den), int(b * den), int(c * den)
        g = gcd(gcd(ia, ib), ic)
        ia, ib, ic = ia // g, ib // g, ic // g
        lead = ia if ia else ib
        if lead < 0:
            ia, ib, ic = -ia, -ib, -ic
        return cls(ia, ib, ic)

    @classmethod
    def through(cls, p, q) -> "LineForm":
        (x1, y1), (x2, y2) = (Q(p[0]), Q(p[1])), (Q(q[0]), Q(q[1]))
        return cls.canonical(y1 - y2, x2 - x1, x1 * y2 - x2 * y1)

    @property
    def normal(self) -> tuple:
        return (self.a, self.b)

    def __call__(self, x, y) -> Fraction:
        return self.a * Q(x) + self.b * Q(y) + self.c

    def poly(self) -> BivariatePoly:
        return BivariatePoly({(1, 0): self.a, (0, 1): self.b, (0, 0): self.c})

    def base_point(self) -> tuple:
        """Foot of the perpendicular from the origin."""
        n2 = Fraction(self.a * self.a + self.b * self.b)
        return (-self.a * self.c / n2, -self.b * self.c / n2)

    def direction(self) -> tuple:
        return (-self.b, self.a)


def directional_derivative(p: BivariatePoly, n: Sequence, r: int) -> BivariatePoly:
    """r-th derivative along n = (a, b): (a d/dx + b d/dy)^r p."""
    if r < 0:
        raise ValueError("derivative order must be non-negative")
    a, b = Q(n[0]), Q(n[1])
    for _ in range(r):
        p = p.dx() * a + p.dy() * b
    return p


def restrict_to_line(p: BivariatePoly, line: LineForm) -> UnivariatePoly:
    """p(x0 - b t, y0 + a t) where (x0, y0) is the line's base point."""
    x0, y0 = line.base_point()
    X = BivariatePoly({(0, 0): x0, (1, 0): -line.b})
    Y = BivariatePoly({(0, 0): y0, (1, 0): line.a})
    sub = p.compose(X, Y)
    deg = max(sub.degree(), 0)
    return UnivariatePoly.of([sub.coeff(k, 0) for k in range(deg + 1)])


def _to_line_coordinates(line: LineForm):
    """Affine substitution (forward, backward) making u = L(x, y) a coordinate.

    forward maps p(x, y) to P(s, u); backward maps P(s, u) back to (x, y).
    """
    a, b, c = Fraction(line.a), Fraction(line.b), Fraction(line.c)
    L = line.poly()
    if b != 0:
        # keep s = x, y = (u - a s - c) / b
        fwd = (BivariatePoly.x(), BivariatePoly({(0, 1): 1 / b, (1, 0): -a / b, (0, 0): -c / b}))
        back = (BivariatePoly.x(), L)
    else:
        # keep s = y, x = (u - c) / a
        fwd = (BivariatePoly({(0, 1): 1 / a, (0, 0): -c / a}), BivariatePoly({(1, 0): 1}))
        back = (BivariatePoly.y(), L)
    return fwd, back


def divide_by_line_power(p: BivariatePoly, line: LineForm, k: int) -> BivariatePoly | None:
    """Return q with p == q * L**k, or None when L**k does not divide p."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if k == 0 or p.is_zero():
        return p
    fwd, back = _to_line_coordinates(line)
    P = p.compose(*fwd)  # variables (s, u), u = L
    if any(b < k for (_, b) in P.terms):
        return None
    Qt = BivariatePoly({(a, b - k): v for (a, b), v in P.terms.items()})
    q = Qt.compose(*back)
    return q.with_bound(max(p.degree_bound - k, q.degree(), 0))
