"""Exact sparse polynomial kernel over the rationals.

Everything downstream (decomposition, form tests, witness recovery,
incidence counting) runs on the types defined here.  There is no
floating point anywhere in the arithmetic: coefficients are
`fractions.Fraction`, so zero tests and equality are decidable and
exact.  Floats appear only in `MultiPoly.evaluate_float`, which exists
for numeric cross-checks of exact results.

Representation
--------------
A `MultiPoly` is a sparse map from exponent vectors to nonzero rational
coefficients.  Exponent vectors are 5-tuples over the fixed variable
universe ``(x, y, z, t, w)``; a polynomial "contains" a variable when
some stored exponent is positive.  Zero coefficients are never stored,
so structural equality of the maps is polynomial equality, and the
degree of the zero polynomial is the -inf sentinel `NEG_INF`.

The canonical term order is degree-lexicographic: total degree first,
ties broken lexicographically with x < y < z < t < w (later variables
weigh more).  `lead_term`, `monic`, gcd normalization and the resultant
sign all refer to this order.

All values in this module are immutable after construction and safe to
share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Optional, Sequence, Union

VARS = ("x", "y", "z", "t", "w")
VAR_INDEX = {v: i for i, v in enumerate(VARS)}
_NVARS = len(VARS)
ZERO_EXP = (0,) * _NVARS

NEG_INF = float("-inf")

Scalar = Union[int, Fraction]

_FR0 = Fraction(0)
_FR1 = Fraction(1)


def as_fraction(value: Scalar) -> Fraction:
    """Coerce an int/Fraction to Fraction; reject floats (exactness)."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def term_key(exp: tuple) -> tuple:
    """Degree-lexicographic sort key of an exponent vector."""
    return (sum(exp), tuple(reversed(exp)))


class MultiPoly:
    """Sparse multivariate polynomial with exact rational coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Mapping[tuple, Scalar]] = None):
        data: dict = {}
        if terms:
            for exp, c in terms.items():
                c = as_fraction(c)
                if not c:
                    continue
                e = tuple(exp)
                if len(e) != _NVARS or any(k < 0 for k in e):
                    raise ValueError(f"bad exponent vector {e!r}")
                acc = data.get(e)
                if acc is None:
                    data[e] = c
                else:
                    acc = acc + c
                    if acc:
                        data[e] = acc
                    else:
                        del data[e]
        self._terms = data
        self._hash = None

    # -- constructors ------------------------------------------------

    @staticmethod
    def zero() -> "MultiPoly":
        return _ZERO

    @staticmethod
    def one() -> "MultiPoly":
        return _ONE

    @staticmethod
    def const(value: Scalar) -> "MultiPoly":
        c = as_fraction(value)
        if not c:
            return _ZERO
        return MultiPoly({ZERO_EXP: c})

    @staticmethod
    def var(name: str) -> "MultiPoly":
        if name not in VAR_INDEX:
            raise ValueError(f"unknown variable {name!r}; universe is {VARS}")
        e = [0] * _NVARS
        e[VAR_INDEX[name]] = 1
        return MultiPoly({tuple(e): _FR1})

    @staticmethod
    def monomial(exp: tuple, coeff: Scalar) -> "MultiPoly":
        return MultiPoly({tuple(exp): coeff})

    # -- basic queries -----------------------------------------------

    def terms(self) -> Iterator[tuple]:
        return iter(self._terms.items())

    def num_terms(self) -> int:
        return len(self._terms)

    def coeff(self, exp: tuple) -> Fraction:
        return self._terms.get(tuple(exp), _FR0)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and ZERO_EXP in self._terms)

    def constant_value(self) -> Fraction:
        if self.is_zero():
            return _FR0
        if not self.is_constant():
            raise ValueError("not a constant polynomial")
        return self._terms[ZERO_EXP]

    def variables(self) -> tuple:
        present = [False] * _NVARS
        for e in self._terms:
            for i, k in enumerate(e):
                if k:
                    present[i] = True
        return tuple(v for i, v in enumerate(VARS) if present[i])

    def total_degree(self):
        """Total degree; NEG_INF for the zero polynomial."""
        if not self._terms:
            return NEG_INF
        return max(sum(e) for e in self._terms)

    def degree_in(self, v: str):
        if not self._terms:
            return NEG_INF
        i = VAR_INDEX[v]
        return max(e[i] for e in self._terms)

    def lead_term(self) -> tuple:
        """(exponent, coefficient) of the deg-lex leading term."""
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self._terms, key=term_key)
        return e, self._terms[e]

    def lead_coeff(self) -> Fraction:
        return self.lead_term()[1]

    def monic(self) -> "MultiPoly":
        """Scale so the deg-lex leading coefficient is 1."""
        c = self.lead_coeff()
        if c == 1:
            return self
        return self * (1 / c)

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        data = dict(self._terms)
        for e, c in other._terms.items():
            acc = data.get(e)
            if acc is None:
                data[e] = c
            else:
                acc = acc + c
                if acc:
                    data[e] = acc
                else:
                    del data[e]
        return _raw(data)

    __radd__ = __add__

    def __neg__(self):
        return _raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = as_fraction(other)
            if not c:
                return _ZERO
            return _raw({e: k * c for e, k in self._terms.items()})
        if not isinstance(other, MultiPoly):
            return NotImplemented
        if not self._terms or not other._terms:
            return _ZERO
        data: dict = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                acc = data.get(e)
                if acc is None:
                    data[e] = c1 * c2
                else:
                    acc = acc + c1 * c2
                    if acc:
                        data[e] = acc
                    else:
                        del data[e]
        return _raw(data)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial power needs a nonnegative integer")
        result = _ONE
        base = self
        k = n
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- calculus and substitution -------------------------------------

    def derivative(self, v: str) -> "MultiPoly":
        """Formal partial derivative with respect to v."""
        i = VAR_INDEX[v]
        data: dict = {}
        for e, c in self._terms.items():
            k = e[i]
            if not k:
                continue
            e2 = e[:i] + (k - 1,) + e[i + 1:]
            data[e2] = data.get(e2, _FR0) + c * k
        return _raw({e: c for e, c in data.items() if c})

    def substitute(self, v: str, value) -> "MultiPoly":
        """Substitute v := value; value may be a rational or a MultiPoly."""
        i = VAR_INDEX[v]
        if all(e[i] == 0 for e in self._terms):
            return self
        if isinstance(value, (int, Fraction)):
            val = as_fraction(value)
            powers = {0: _FR1}
            data: dict = {}
            for e, c in self._terms.items():
                k = e[i]
                if k not in powers:
                    powers[k] = val ** k
                c2 = c * powers[k]
                if not c2:
                    continue
                e2 = e[:i] + (0,) + e[i + 1:]
                acc = data.get(e2)
                if acc is None:
                    data[e2] = c2
                else:
                    acc = acc + c2
                    if acc:
                        data[e2] = acc
                    else:
                        del data[e2]
            return _raw(data)
        if not isinstance(value, MultiPoly):
            raise TypeError("substitute needs a rational or a MultiPoly")
        # group by the exponent of v, then Horner in the substituted value
        parts: dict = {}
        for e, c in self._terms.items():
            k = e[i]
            e2 = e[:i] + (0,) + e[i + 1:]
            parts.setdefault(k, {})[e2] = c
        result = _ZERO
        for k in range(max(parts), -1, -1):
            result = result * value
            if k in parts:
                result = result + _raw(dict(parts[k]))
        return result

    def coefficients_in(self, v: str) -> list:
        """Dense coefficient list in v: entry j is the (v-free) coefficient of v**j."""
        if not self._terms:
            return []
        i = VAR_INDEX[v]
        d = max(e[i] for e in self._terms)
        buckets: list = [dict() for _ in range(d + 1)]
        for e, c in self._terms.items():
            e2 = e[:i] + (0,) + e[i + 1:]
            buckets[e[i]][e2] = c
        return [_raw(b) for b in buckets]

    def evaluate(self, point: Mapping[str, Scalar]) -> Fraction:
        """Exact evaluation; every present variable must be assigned."""
        vals = {}
        for v in self.variables():
            if v not in point:
                raise ValueError(f"no value for variable {v}")
            vals[VAR_INDEX[v]] = as_fraction(point[v])
        total = _FR0
        for e, c in self._terms.items():
            term = c
            for i, k in enumerate(e):
                if k:
                    term *= vals[i] ** k
            total += term
        return total

    def evaluate_float(self, point: Mapping[str, float]) -> float:
        """Double-precision evaluation (cross-check use only)."""
        vals = {}
        for v in self.variables():
            vals[VAR_INDEX[v]] = float(point[v])
        total = 0.0
        for e, c in self._terms.items():
            term = float(c)
            for i, k in enumerate(e):
                if k:
                    term *= vals[i] ** k
            total += term
        return total

    def __repr__(self):
        from . import parsing

        return f"MultiPoly({parsing.format_poly(self)!r})"

    def __str__(self):
        from . import parsing

        return parsing.format_poly(self)


def _raw(data: dict) -> MultiPoly:
    """Wrap an already-normalized term dict without copying."""
    p = MultiPoly.__new__(MultiPoly)
    p._terms = data
    p._hash = None
    return p


def _coerce(value) -> MultiPoly:
    if isinstance(value, MultiPoly):
        return value
    if isinstance(value, (int, Fraction)):
        return MultiPoly.const(value)
    return NotImplemented


_ZERO = _raw({})
_ONE = _raw({ZERO_EXP: _FR1})


# ---------------------------------------------------------------------------
# univariate polynomials
# ---------------------------------------------------------------------------


class UniPoly:
    """Dense univariate polynomial in one declared variable.

    `coeffs[i]` multiplies `var**i`; the tuple carries no trailing
    zeros, and the empty tuple is the zero polynomial.
    """

    __slots__ = ("var", "coeffs")

    def __init__(self, var: str, coeffs: Iterable[Scalar]):
        if var not in VAR_INDEX:
            raise ValueError(f"unknown variable {var!r}")
        cs = [as_fraction(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "var", var)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("UniPoly is immutable")

    @staticmethod
    def const(var: str, value: Scalar) -> "UniPoly":
        return UniPoly(var, (value,))

    @staticmethod
    def identity(var: str) -> "UniPoly":
        return UniPoly(var, (0, 1))

    @classmethod
    def from_multi(cls, p: MultiPoly, var: Optional[str] = None) -> "UniPoly":
        """View a MultiPoly touching at most one variable as univariate."""
        vs = p.variables()
        if len(vs) > 1:
            raise ValueError(f"polynomial is not univariate (variables {vs})")
        if vs:
            if var is not None and var != vs[0]:
                raise ValueError(f"polynomial lives in {vs[0]}, not {var}")
            var = vs[0]
        elif var is None:
            raise ValueError("constant polynomial: declare the variable explicitly")
        if p.is_zero():
            return cls(var, ())
        return cls(var, [c.constant_value() for c in p.coefficients_in(var)])

    def to_multi(self) -> MultiPoly:
        i = VAR_INDEX[self.var]
        data = {}
        for k, c in enumerate(self.coeffs):
            if c:
                e = [0] * _NVARS
                e[i] = k
                data[tuple(e)] = c
        return _raw(data)

    def in_var(self, var: str) -> "UniPoly":
        """The same coefficients read in another variable."""
        return UniPoly(var, self.coeffs) if var != self.var else self

    # -- queries -------------------------------------------------------

    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def constant_value(self) -> Fraction:
        if not self.coeffs:
            return _FR0
        if len(self.coeffs) > 1:
            raise ValueError("not a constant polynomial")
        return self.coeffs[0]

    def coeff(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else _FR0

    def lead_coeff(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    # -- arithmetic ------------------------------------------------------

    def _align(self, other):
        """Bring both operands into one variable; constants are flexible."""
        if isinstance(other, (int, Fraction)):
            return self, UniPoly.const(self.var, other)
        if not isinstance(other, UniPoly):
            return None
        if self.var == other.var:
            return self, other
        if other.is_constant():
            return self, other.in_var(self.var)
        if self.is_constant():
            return self.in_var(other.var), other
        raise ValueError(f"variable mismatch: {self.var} vs {other.var}")

    def __add__(self, other):
        pair = self._align(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        n = max(len(a.coeffs), len(b.coeffs))
        return UniPoly(a.var, [a.coeff(i) + b.coeff(i) for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(self.var, [-c for c in self.coeffs])

    def __sub__(self, other):
        pair = self._align(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return UniPoly(self.var, [c * other for c in self.coeffs])
        pair = self._align(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        if not a.coeffs or not b.coeffs:
            return UniPoly(a.var, ())
        out = [_FR0] * (len(a.coeffs) + len(b.coeffs) - 1)
        for i, ca in enumerate(a.coeffs):
            if not ca:
                continue
            for j, cb in enumerate(b.coeffs):
                out[i + j] += ca * cb
        return UniPoly(a.var, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial power needs a nonnegative integer")
        result = UniPoly.const(self.var, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if not isinstance(other, UniPoly):
            return NotImplemented
        if self.coeffs != other.coeffs:
            return False
        # constants compare equal regardless of the declared variable
        return self.is_constant() or self.var == other.var

    def __hash__(self):
        return hash((self.var if len(self.coeffs) > 1 else "", self.coeffs))

    def monic(self) -> "UniPoly":
        lc = self.lead_coeff()
        return self if lc == 1 else self * (1 / lc)

    def derivative(self) -> "UniPoly":
        return UniPoly(self.var, [c * i for i, c in enumerate(self.coeffs)][1:])

    def evaluate(self, value: Scalar) -> Fraction:
        v = as_fraction(value)
        acc = _FR0
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return acc

    def compose(self, inner: "UniPoly") -> "UniPoly":
        """self(inner): result lives in inner's variable."""
        acc = UniPoly(inner.var, ())
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def quo_rem(self, divisor: "UniPoly") -> tuple:
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        d = self._match(divisor)
        q = [_FR0] * max(0, len(self.coeffs) - len(d.coeffs) + 1)
        r = list(self.coeffs)
        dc = d.coeffs
        lead = dc[-1]
        while len(r) >= len(dc):
            c = r[-1] / lead
            shift = len(r) - len(dc)
            q[shift] = c
            for i, b in enumerate(dc):
                r[shift + i] -= c * b
            while r and not r[-1]:
                r.pop()
            if len(r) < len(dc):
                break
        return UniPoly(self.var, q), UniPoly(self.var, r)

    def __repr__(self):
        return f"UniPoly({self.var!r}, {tuple(map(str, self.coeffs))})"

    def __str__(self):
        from . import parsing

        return parsing.format_poly(self.to_multi())


def apply_unipoly(outer: UniPoly, argument: MultiPoly) -> MultiPoly:
    """outer(argument) for a multivariate argument, by Horner."""
    acc = MultiPoly.zero()
    for c in reversed(outer.coeffs):
        acc = acc * argument + c
    return acc


# ---------------------------------------------------------------------------
# rational functions
# ---------------------------------------------------------------------------


class RatFunc:
    """Reduced quotient of two MultiPoly, denominator monic in deg-lex."""

    __slots__ = ("num", "den")

    def __init__(self, num: MultiPoly, den: MultiPoly = _ONE):
        num = _coerce(num)
        den = _coerce(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            num, den = _ZERO, _ONE
        else:
            g = poly_gcd(num, den)
            if not g.is_constant():
                num = exact_div(num, g)
                den = exact_div(den, g)
            lc = den.lead_coeff()
            if lc != 1:
                inv = 1 / lc
                num = num * inv
                den = den * inv
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RatFunc is immutable")

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den == _ONE

    def to_poly(self) -> MultiPoly:
        if not self.is_polynomial():
            raise ValueError("not a polynomial")
        return self.num

    def __add__(self, other):
        o = _ratcoerce(other)
        if o is NotImplemented:
            return o
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        o = _ratcoerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = _ratcoerce(other)
        if o is NotImplemented:
            return o
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _ratcoerce(other)
        if o is NotImplemented:
            return o
        return RatFunc(self.num * o.den, self.den * o.num)

    def derivative(self, v: str) -> "RatFunc":
        return RatFunc(
            self.num.derivative(v) * self.den - self.num * self.den.derivative(v),
            self.den * self.den,
        )

    def __eq__(self, other):
        o = _ratcoerce(other)
        if o is NotImplemented:
            return o
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RatFunc({self.num!s} / {self.den!s})"

    def __str__(self):
        if self.is_polynomial():
            return str(self.num)
        return f"({self.num!s}) / ({self.den!s})"


def _ratcoerce(value):
    if isinstance(value, RatFunc):
        return value
    if isinstance(value, (MultiPoly, int, Fraction)):
        return RatFunc(_coerce(value))
    return NotImplemented


# ---------------------------------------------------------------------------
# affine maps t -> a*t + b
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AffineMap:
    """Invertible affine map t -> a*t + b with exact rational a != 0, b."""

    a: Fraction
    b: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", as_fraction(self.a))
        object.__setattr__(self, "b", as_fraction(self.b))
        if not self.a:
            raise ValueError("affine map needs nonzero slope")

    def __call__(self, value: Scalar) -> Fraction:
        return self.a * as_fraction(value) + self.b

    def compose(self, other: "AffineMap") -> "AffineMap":
        """self after other: t -> self(other(t))."""
        return AffineMap(self.a * other.a, self.a * other.b + self.b)

    def inverse(self) -> "AffineMap":
        return AffineMap(1 / self.a, -self.b / self.a)

    def is_identity(self) -> bool:
        return self.a == 1 and self.b == 0

    def as_unipoly(self, var: str) -> UniPoly:
        return UniPoly(var, (self.b, self.a))


# ---------------------------------------------------------------------------
# exact division, gcd, squarefree part
# ---------------------------------------------------------------------------


def try_exact_div(a: MultiPoly, b: MultiPoly):
    """a / b when b divides a exactly, else None."""
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    if a.is_zero():
        return _ZERO
    if b.is_constant():
        return a * (1 / b.constant_value())
    eb, cb = b.lead_term()
    q: dict = {}
    r = a
    while not r.is_zero():
        er, cr = r.lead_term()
        diff = tuple(i - j for i, j in zip(er, eb))
        if any(k < 0 for k in diff):
            return None
        c = cr / cb
        q[diff] = c
        r = r - MultiPoly.monomial(diff, c) * b
    return _raw(q)


def exact_div(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    q = try_exact_div(a, b)
    if q is None:
        raise ArithmeticError("inexact polynomial division")
    return q


def _lead_coeff_in(p: MultiPoly, v: str) -> MultiPoly:
    cs = p.coefficients_in(v)
    return cs[-1] if cs else _ZERO


def _shift_by_var(p: MultiPoly, v: str, k: int) -> MultiPoly:
    if k == 0 or p.is_zero():
        return p
    i = VAR_INDEX[v]
    return _raw({e[:i] + (e[i] + k,) + e[i + 1:]: c for e, c in p._terms.items()})


def _prem(a: MultiPoly, b: MultiPoly, v: str) -> MultiPoly:
    """Sparse pseudo-remainder of a by b in v (leading terms cancel each step)."""
    db = b.degree_in(v)
    lcb = _lead_coeff_in(b, v)
    r = a
    while not r.is_zero():
        dr = r.degree_in(v)
        if dr < db:
            break
        lcr = _lead_coeff_in(r, v)
        r = lcb * r - _shift_by_var(lcr, v, dr - db) * b
    return r


def _content_in(p: MultiPoly, v: str) -> MultiPoly:
    g = _ZERO
    for c in p.coefficients_in(v):
        if not c.is_zero():
            g = poly_gcd(g, c)
            if g == _ONE:
                break
    return g


def poly_gcd(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    """Gcd in Q[x..w], monic in deg-lex; primitive PRS per variable."""
    if a.is_zero():
        return _ZERO if b.is_zero() else b.monic()
    if b.is_zero():
        return a.monic()
    if a.is_constant() or b.is_constant():
        return _ONE
    va, vb = set(a.variables()), set(b.variables())
    v = max(va | vb, key=VAR_INDEX.__getitem__)
    if v not in va or v not in vb:
        # one side is v-free; common divisors are v-free
        if v in va:
            a, b = b, a
        return poly_gcd(a, _content_in(b, v))
    ca, cb = _content_in(a, v), _content_in(b, v)
    pa, pb = exact_div(a, ca), exact_div(b, cb)
    c = poly_gcd(ca, cb)
    if pa.degree_in(v) < pb.degree_in(v):
        pa, pb = pb, pa
    while True:
        r = _prem(pa, pb, v)
        if r.is_zero():
            g = pb
            break
        if r.degree_in(v) <= 0:
            g = _ONE
            break
        pa, pb = pb, exact_div(r, _content_in(r, v))
    if g != _ONE:
        g = exact_div(g, _content_in(g, v))
    return (c * g).monic()


def squarefree_part(p: MultiPoly) -> MultiPoly:
    """Product of the distinct irreducible factors (characteristic 0)."""
    if p.is_zero():
        return p
    if p.is_constant():
        return _ONE
    g = p
    for v in p.variables():
        g = poly_gcd(g, p.derivative(v))
        if g.is_constant():
            return p
    return exact_div(p, g)


# ---------------------------------------------------------------------------
# resultants (fraction-free Bareiss over the polynomial ring)
# ---------------------------------------------------------------------------


def _det_bareiss(m: list) -> MultiPoly:
    n = len(m)
    sign = 1
    prev = _ONE
    for r in range(n - 1):
        if m[r][r].is_zero():
            for k in range(r + 1, n):
                if not m[k][r].is_zero():
                    m[r], m[k] = m[k], m[r]
                    sign = -sign
                    break
            else:
                return _ZERO
        pivot = m[r][r]
        for i in range(r + 1, n):
            row_i = m[i]
            row_r = m[r]
            head = row_i[r]
            for j in range(r + 1, n):
                row_i[j] = exact_div(pivot * row_i[j] - head * row_r[j], prev)
            row_i[r] = _ZERO
        prev = pivot
    det = m[n - 1][n - 1]
    return det if sign == 1 else -det


def resultant_wrt(p: MultiPoly, q: MultiPoly, v: str) -> MultiPoly:
    """Sylvester resultant of p and q with respect to v, exact."""
    dp, dq = p.degree_in(v), q.degree_in(v)
    if p.is_zero() or q.is_zero() or dp < 1 or dq < 1:
        raise ValueError(f"not a proper elimination: both arguments need positive degree in {v}")
    pc = list(reversed(p.coefficients_in(v)))
    qc = list(reversed(q.coefficients_in(v)))
    n = dp + dq
    m = [[_ZERO] * n for _ in range(n)]
    for r in range(dq):
        for j, c in enumerate(pc):
            m[r][r + j] = c
    for r in range(dp):
        for j, c in enumerate(qc):
            m[dq + r][r + j] = c
    return _det_bareiss(m)


# ---------------------------------------------------------------------------
# k-adic expansion
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class KadicExpansion:
    """F written as sum of a_i(k(v), rest) * v**i with i < deg k.

    `coeffs[i]` is a_i, with `placeholder` standing for k(v).  When every
    a_i with i > 0 vanishes, F is a polynomial in k(v) over the remaining
    variables; `pure` is set and `weights[m]` is the coefficient of
    k(v)**m (a polynomial free of both v and the placeholder).
    """

    var: str
    placeholder: str
    coeffs: tuple
    pure: bool
    weights: Optional[tuple]


def divmod_by_univariate(p: MultiPoly, k: UniPoly) -> tuple:
    """Quotient and remainder of p by k(v) viewed in R[rest][v]."""
    v = k.var
    d = k.degree()
    if d is NEG_INF or d < 1:
        raise ValueError("divisor must be nonconstant")
    k_multi = k.to_multi()
    lead = k.lead_coeff()
    q = _ZERO
    r = p
    while True:
        dr = r.degree_in(v)
        if dr is NEG_INF or dr < d:
            return q, r
        head = _shift_by_var(_lead_coeff_in(r, v) * (1 / lead), v, dr - d)
        q = q + head
        r = r - head * k_multi


def kadic_expansion(f: MultiPoly, k: UniPoly) -> KadicExpansion:
    """Unique base-k rewriting of f in k's variable (iterated division)."""
    v = k.var
    d = k.degree()
    if d is NEG_INF or d < 1:
        raise ValueError("inner polynomial must be nonconstant")
    used = set(f.variables()) | {v}
    for candidate in ("t", "w", "z", "y", "x"):
        if candidate not in used:
            placeholder = candidate
            break
    else:
        raise ValueError("no free variable available for the expansion")
    layers = []
    cur = f
    while not cur.is_zero():
        cur, rem = divmod_by_univariate(cur, k)
        layers.append(rem.coefficients_in(v))
    ph = MultiPoly.var(placeholder)
    coeffs = [_ZERO] * d
    for j, lay in enumerate(layers):
        phj = ph ** j
        for i, c in enumerate(lay):
            if not c.is_zero():
                coeffs[i] = coeffs[i] + c * phj
    pure = all(coeffs[i].is_zero() for i in range(1, d))
    weights = None
    if pure:
        weights = tuple(coeffs[0].coefficients_in(placeholder)) if not coeffs[0].is_zero() else ()
    return KadicExpansion(var=v, placeholder=placeholder, coeffs=tuple(coeffs), pure=pure, weights=weights)
