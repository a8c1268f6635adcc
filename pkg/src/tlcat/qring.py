"""Exact arithmetic in the field of rational functions of q.

Laurent polynomials in q over the integers, reduced rational functions
built on top of them, quantum integers [n], and truncated power-series
expansion. Everything is exact integer arithmetic; there is no floating
point anywhere in this package.

The canonical form of a :class:`Scalar` makes equality structural: the
numerator absorbs all powers of q, the denominator is an ordinary
polynomial with nonzero constant term and positive leading coefficient,
and the two share no common factor.
"""

from __future__ import annotations

import functools
from fractions import Fraction
from math import gcd as _int_gcd
from typing import Iterable, Union


class NonExpandableError(ValueError):
    """The scalar has no power-series expansion with integer coefficients."""


# ---------------------------------------------------------------------------
# Dense coefficient-list helpers for ordinary (valuation >= 0) polynomials.
# Index = exponent, last entry nonzero, [] is the zero polynomial.
# ---------------------------------------------------------------------------

def _trim(cs: list[int]) -> list[int]:
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _content(cs: list[int]) -> int:
    g = 0
    for c in cs:
        g = _int_gcd(g, abs(c))
        if g == 1:
            break
    return g


def _prem(u: list[int], v: list[int]) -> list[int]:
    """Pseudo-remainder of u by v; exact up to a power of the leading coefficient of v."""
    u = list(u)
    dv = len(v) - 1
    lv = v[-1]
    while u and len(u) - 1 >= dv:
        du = len(u) - 1
        lu = u[-1]
        if lv != 1:
            u = [lv * c for c in u]
        for i, c in enumerate(v):
            u[du - dv + i] -= lu * c
        _trim(u)
    return u


def _poly_gcd(a: list[int], b: list[int]) -> list[int]:
    """Gcd in Z[q] (content included), normalized to a positive leading coefficient."""
    if not a:
        a, b = b, a
    if not b:
        if not a:
            return []
        return [-c for c in a] if a[-1] < 0 else list(a)
    ca, cb = _content(a), _content(b)
    c = _int_gcd(ca, cb)
    a = [x // ca for x in a]
    b = [x // cb for x in b]
    while b:
        r = _prem(a, b)
        cr = _content(r)
        a, b = b, ([x // cr for x in r] if cr else [])
    if a[-1] < 0:
        a = [-x for x in a]
    return [c * x for x in a]


def _divexact(a: list[int], b: list[int]) -> list[int]:
    """Quotient a // b, assuming b divides a exactly in Z[q]."""
    if not a:
        return []
    lb = b[-1]
    quo = [0] * (len(a) - len(b) + 1)
    rem = list(a)
    for i in range(len(quo) - 1, -1, -1):
        c = rem[i + len(b) - 1]
        if c % lb:
            raise ArithmeticError("polynomial division is not exact")
        qi = c // lb
        quo[i] = qi
        if qi:
            for j, bj in enumerate(b):
                rem[i + j] -= qi * bj
    if any(rem):
        raise ArithmeticError("polynomial division is not exact")
    return quo


def _poly_lcm(a: list[int], b: list[int]) -> list[int]:
    """Least common multiple in Z[q], positive leading coefficient."""
    g = _poly_gcd(a, b)
    out = _poly_mul_list(a, _divexact(b, g))
    return [-c for c in out] if out[-1] < 0 else out


def _poly_mul_list(a: list[int], b: list[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _trim(out)


class LaurentPoly:
    """Laurent polynomial in q with integer coefficients.

    Stored as a map from exponent to nonzero coefficient. The term map is
    itself the canonical form, so ``==`` is exact equality in Z[q, q^-1].
    Instances are immutable and hashable.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Union[int, dict, "LaurentPoly", Iterable] = 0):
        data: dict[int, int] = {}
        if isinstance(terms, LaurentPoly):
            data = dict(terms._terms)
        elif isinstance(terms, int):
            if terms:
                data[0] = terms
        else:
            items = terms.items() if isinstance(terms, dict) else terms
            for e, c in items:
                c = data.get(e, 0) + c
                if c:
                    data[e] = c
                elif e in data:
                    del data[e]
        object.__setattr__(self, "_terms", data)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls(0)

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls(1)

    @classmethod
    def q_power(cls, e: int, coeff: int = 1) -> "LaurentPoly":
        """The monomial coeff * q^e."""
        return cls({e: coeff} if coeff else 0)

    # -- structure ----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def coeff(self, e: int) -> int:
        return self._terms.get(e, 0)

    def items(self) -> list[tuple[int, int]]:
        """Terms as (exponent, coefficient) pairs in ascending exponent order."""
        return sorted(self._terms.items())

    @property
    def degree(self) -> int:
        if not self._terms:
            raise ValueError("degree of the zero polynomial is undefined")
        return max(self._terms)

    @property
    def valuation(self) -> int:
        if not self._terms:
            raise ValueError("valuation of the zero polynomial is undefined")
        return min(self._terms)

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by q^k."""
        if k == 0 or not self._terms:
            return self
        return LaurentPoly({e + k: c for e, c in self._terms.items()})

    def content(self) -> int:
        return _content(list(self._terms.values()))

    def as_monomial(self) -> tuple[int, int] | None:
        """(exponent, coefficient) if this is a single term, else None."""
        if len(self._terms) != 1:
            return None
        [(e, c)] = self._terms.items()
        return (e, c)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other) -> "LaurentPoly":
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        data = dict(self._terms)
        for e, c in other._terms.items():
            s = data.get(e, 0) + c
            if s:
                data[e] = s
            elif e in data:
                del data[e]
        out = LaurentPoly.__new__(LaurentPoly)
        object.__setattr__(out, "_terms", data)
        return out

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        out = LaurentPoly.__new__(LaurentPoly)
        object.__setattr__(out, "_terms", {e: -c for e, c in self._terms.items()})
        return out

    def __sub__(self, other) -> "LaurentPoly":
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "LaurentPoly":
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        if not self._terms or not other._terms:
            return LaurentPoly()
        a, b = self._terms, other._terms
        if len(a) > len(b):
            a, b = b, a
        data: dict[int, int] = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = ea + eb
                s = data.get(e, 0) + ca * cb
                if s:
                    data[e] = s
                elif e in data:
                    del data[e]
        out = LaurentPoly.__new__(LaurentPoly)
        object.__setattr__(out, "_terms", data)
        return out

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            raise ValueError("negative powers leave Z[q, q^-1]; use Scalar")
        out = LaurentPoly.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        mono = self.as_monomial()
        if mono is not None and mono[0] == 0:
            return hash(mono[1])
        if not self._terms:
            return hash(0)
        return hash(tuple(self.items()))

    # -- rendering ----------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for e, c in self.items():
            if e == 0:
                body = str(abs(c))
            else:
                var = "q" if e == 1 else f"q^{e}"
                body = var if abs(c) == 1 else f"{abs(c)}*{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"{'+' if c > 0 else '-'} {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({dict(self.items())!r})"

    # -- conversion to/from dense ordinary form (internal) -------------------

    def _ordinary(self) -> tuple[list[int], int]:
        """(coefficient list, valuation) with the list starting at exponent 0."""
        if not self._terms:
            return [], 0
        v = self.valuation
        cs = [0] * (self.degree - v + 1)
        for e, c in self._terms.items():
            cs[e - v] = c
        return cs, v

    @staticmethod
    def _from_list(cs: list[int], shift: int = 0) -> "LaurentPoly":
        return LaurentPoly({i + shift: c for i, c in enumerate(cs) if c})


def _coerce_poly(x) -> "LaurentPoly":
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly(x)
    return NotImplemented


@functools.lru_cache(maxsize=None)
def quantum_int(n: int) -> LaurentPoly:
    """The quantum integer [n] = q^-(n-1) + q^-(n-3) + ... + q^(n-1); [0] = 0."""
    if n < 0:
        raise ValueError(f"quantum integer index must be nonnegative, got {n}")
    return LaurentPoly({e: 1 for e in range(-(n - 1), n, 2)})


@functools.lru_cache(maxsize=None)
def loop_factor(loops: int) -> LaurentPoly:
    """[2]^loops, the value of `loops` disjoint circles."""
    return quantum_int(2) ** loops


_ONE_POLY = LaurentPoly(1)


class Scalar:
    """Element of Q(q), held as a reduced fraction num / den of Laurent polynomials.

    Canonical form: den is an ordinary polynomial (valuation 0) with positive
    leading coefficient, num and den share no common factor, and num carries
    all q-power shifts. Equality of Scalars is therefore structural and agrees
    with equality in the rational-function field.
    """

    __slots__ = ("num", "den")

    def __init__(self, num=0, den=1):
        num = _coerce_poly(num)
        den = _coerce_poly(den)
        if num is NotImplemented or den is NotImplemented:
            raise TypeError("Scalar components must be LaurentPoly or int")
        if den.is_zero:
            raise ZeroDivisionError("scalar with zero denominator")
        if num.is_zero:
            object.__setattr__(self, "num", LaurentPoly())
            object.__setattr__(self, "den", _ONE_POLY)
            return
        ncs, nv = num._ordinary()
        dcs, dv = den._ordinary()
        g = _poly_gcd(ncs, dcs)
        if g != [1]:
            ncs = _divexact(ncs, g)
            dcs = _divexact(dcs, g)
        if dcs[-1] < 0:
            ncs = [-c for c in ncs]
            dcs = [-c for c in dcs]
        object.__setattr__(self, "num", LaurentPoly._from_list(ncs, nv - dv))
        object.__setattr__(self, "den", LaurentPoly._from_list(dcs))

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    @classmethod
    def _raw(cls, num: LaurentPoly, den: LaurentPoly) -> "Scalar":
        """Bypass canonicalization for components already in canonical form."""
        s = object.__new__(cls)
        object.__setattr__(s, "num", num)
        object.__setattr__(s, "den", den)
        return s

    @classmethod
    def zero(cls) -> "Scalar":
        return cls._raw(LaurentPoly(), _ONE_POLY)

    @classmethod
    def one(cls) -> "Scalar":
        return cls._raw(_ONE_POLY, _ONE_POLY)

    @classmethod
    def q_power(cls, e: int, coeff: int = 1) -> "Scalar":
        return cls._raw(LaurentPoly.q_power(e, coeff), _ONE_POLY)

    # -- structure ----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_one(self) -> bool:
        return self.num == _ONE_POLY and self.den == _ONE_POLY

    def __bool__(self) -> bool:
        return not self.is_zero

    def as_monomial(self) -> tuple[int, int] | None:
        """(exponent, coefficient) if this scalar is a single Laurent term."""
        if self.den != _ONE_POLY:
            return None
        return self.num.as_monomial()

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other) -> "Scalar":
        other = _coerce_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        if self.den == other.den:
            num = self.num + other.num
            if num.is_zero:
                return Scalar.zero()
            if self.den == _ONE_POLY:
                return Scalar._raw(num, _ONE_POLY)
            return Scalar(num, self.den)
        # common denominator through the gcd keeps the reduction small
        d1, _ = self.den._ordinary()
        d2, _ = other.den._ordinary()
        g = _poly_gcd(d1, d2)
        if g == [1]:
            return Scalar(self.num * other.den + other.num * self.den,
                          self.den * other.den)
        d1r = LaurentPoly._from_list(_divexact(d1, g))
        d2r = LaurentPoly._from_list(_divexact(d2, g))
        return Scalar(self.num * d2r + other.num * d1r, self.den * d2r)

    __radd__ = __add__

    def __neg__(self) -> "Scalar":
        return Scalar._raw(-self.num, self.den)

    def __sub__(self, other) -> "Scalar":
        other = _coerce_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Scalar":
        other = _coerce_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "Scalar":
        other = _coerce_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero or other.is_zero:
            return Scalar.zero()
        if self.den == _ONE_POLY and other.den == _ONE_POLY:
            return Scalar._raw(self.num * other.num, _ONE_POLY)
        # Cross-cancel each numerator against the opposite denominator.
        # Both inputs are reduced, so the four remaining pieces are pairwise
        # coprime and the product needs no further reduction.
        n1, v1 = self.num._ordinary()
        n2, v2 = other.num._ordinary()
        d1, _ = self.den._ordinary()
        d2, _ = other.den._ordinary()
        if d2 != [1]:
            g = _poly_gcd(n1, d2)
            if g != [1]:
                n1 = _divexact(n1, g)
                d2 = _divexact(d2, g)
        if d1 != [1]:
            g = _poly_gcd(n2, d1)
            if g != [1]:
                n2 = _divexact(n2, g)
                d1 = _divexact(d1, g)
        num = LaurentPoly._from_list(n1, v1) * LaurentPoly._from_list(n2, v2)
        if d1 == [1] and d2 == [1]:
            return Scalar._raw(num, _ONE_POLY)
        den = LaurentPoly._from_list(d1) * LaurentPoly._from_list(d2)
        return Scalar._raw(num, den)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if self.is_zero:
            raise ZeroDivisionError("inverse of the zero scalar")
        return Scalar(self.den, self.num)

    def __truediv__(self, other) -> "Scalar":
        other = _coerce_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("division by the zero scalar")
        return self * other.inverse()

    def __rtruediv__(self, other) -> "Scalar":
        other = _coerce_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, n: int) -> "Scalar":
        if n < 0:
            return self.inverse() ** (-n)
        out = Scalar.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        other = _coerce_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self.den == _ONE_POLY:
            return hash(self.num)
        return hash((tuple(self.num.items()), tuple(self.den.items())))

    # -- rendering ----------------------------------------------------------

    def __str__(self) -> str:
        return f"{_wrap(self.num)} / {_wrap(self.den)}"

    def __repr__(self) -> str:
        return f"Scalar({self.num!r}, {self.den!r})"

    # -- JSON wire form ------------------------------------------------------

    def to_json_dict(self) -> dict:
        """{"num": [[exp, int], ...], "den": [[exp, int], ...]} with exponents ascending."""
        return {
            "num": [[e, c] for e, c in self.num.items()],
            "den": [[e, c] for e, c in self.den.items()],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "Scalar":
        num = LaurentPoly((int(e), int(c)) for e, c in data["num"])
        den = LaurentPoly((int(e), int(c)) for e, c in data["den"])
        return cls(num, den)


def _wrap(p: LaurentPoly) -> str:
    s = str(p)
    return f"({s})" if len(p._terms) > 1 else s


def _coerce_scalar(x) -> "Scalar":
    if isinstance(x, Scalar):
        return x
    if isinstance(x, LaurentPoly):
        return Scalar._raw(x, _ONE_POLY) if not x.is_zero else Scalar.zero()
    if isinstance(x, int):
        return Scalar._raw(LaurentPoly(x), _ONE_POLY) if x else Scalar.zero()
    return NotImplemented


def qratio(a: int, b: int) -> Scalar:
    """The scalar [a] / [b]."""
    return Scalar(quantum_int(a), quantum_int(b))


def common_denominator(scalars: list[Scalar]) -> tuple[LaurentPoly, list[LaurentPoly]]:
    """Least common denominator L and numerators rescaled so scalar i is nums[i]/L.

    Lets bulk bilinear work (morphism composition) run on plain Laurent
    polynomials, deferring reduction to one canonicalization per result.
    """
    lists: dict[LaurentPoly, list[int]] = {}
    lcm = [1]
    for s in scalars:
        if s.den not in lists:
            d, _ = s.den._ordinary()
            lists[s.den] = d
            lcm = _poly_lcm(lcm, d)
    cofactor = {den: LaurentPoly._from_list(_divexact(lcm, d))
                for den, d in lists.items()}
    nums = [s.num * cofactor[s.den] for s in scalars]
    return LaurentPoly._from_list(lcm), nums


def series_expand(s: Scalar, order: int) -> list[tuple[int, int]]:
    """Truncated Laurent-series expansion of s, as (exponent, coefficient) pairs.

    Expands s in the ring of integer Laurent series bounded below, keeping
    terms up to and including q^order; zero coefficients are omitted.
    Raises NonExpandableError when the expansion would need non-integer
    coefficients (the reduced denominator is not a series unit).
    """
    if s.is_zero:
        return []
    den = s.den.items()
    d0 = den[0][1] if den[0][0] == 0 else 0
    if d0 == 0:
        raise NonExpandableError("denominator has no constant term")
    start = s.num.valuation
    coeffs: dict[int, Fraction] = {}
    out: list[tuple[int, int]] = []
    for e in range(start, order + 1):
        acc = Fraction(s.num.coeff(e))
        for j, dj in den:
            if j == 0:
                continue
            prev = coeffs.get(e - j)
            if prev:
                acc -= dj * prev
        c = acc / d0
        coeffs[e] = c
        if c:
            if c.denominator != 1:
                raise NonExpandableError(
                    "expansion has non-integer coefficients; "
                    "denominator is not a unit in the series ring")
            out.append((e, int(c)))
    return out
