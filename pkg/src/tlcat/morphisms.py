"""Formal linear combinations of diagrams with rational-function coefficients.

A Morphism is a finite sum of Matchings sharing one boundary, with nonzero
Scalar coefficients. All identities in this package are equalities of
Morphisms, and equality is structural: term maps over canonical Matchings
with canonical Scalars.
"""

from __future__ import annotations

from typing import Iterable

from . import diagrams
from .diagrams import BoundaryMismatchError, Matching
from .qring import LaurentPoly, Scalar, common_denominator, loop_factor, _coerce_scalar


class Morphism:
    """Element of TL(n_bottom, n_top): a Scalar-weighted sum of Matchings."""

    __slots__ = ("n_bottom", "n_top", "_terms")

    def __init__(self, n_bottom: int, n_top: int,
                 terms: Iterable | dict | None = None, *, _validate: bool = True):
        data: dict[Matching, Scalar] = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for mat, coeff in items:
                coeff = _as_scalar(coeff)
                prev = data.get(mat)
                coeff = prev + coeff if prev is not None else coeff
                if coeff.is_zero:
                    data.pop(mat, None)
                else:
                    data[mat] = coeff
        if _validate:
            for mat in data:
                if mat.n_bottom != n_bottom or mat.n_top != n_top:
                    raise BoundaryMismatchError(
                        f"term in TL({mat.n_bottom},{mat.n_top}) inside a "
                        f"morphism of TL({n_bottom},{n_top})")
        object.__setattr__(self, "n_bottom", n_bottom)
        object.__setattr__(self, "n_top", n_top)
        object.__setattr__(self, "_terms", data)

    def __setattr__(self, name, value):
        raise AttributeError("Morphism is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, n_bottom: int, n_top: int | None = None) -> "Morphism":
        return cls(n_bottom, n_bottom if n_top is None else n_top)

    @classmethod
    def identity(cls, n: int) -> "Morphism":
        return cls(n, n, [(diagrams.identity(n), Scalar.one())], _validate=False)

    @classmethod
    def of(cls, mat: Matching, coeff=1) -> "Morphism":
        """The single-diagram morphism coeff * mat."""
        return cls(mat.n_bottom, mat.n_top, [(mat, coeff)], _validate=False)

    # -- structure ----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def coeff(self, mat: Matching) -> Scalar:
        return self._terms.get(mat, Scalar.zero())

    def terms(self) -> list[tuple[Matching, Scalar]]:
        """Term list in canonical (matching sort key) order."""
        return sorted(self._terms.items(), key=lambda t: t[0].sort_key())

    def support(self) -> list[Matching]:
        return sorted(self._terms, key=Matching.sort_key)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other):
        if not isinstance(other, Morphism):
            return NotImplemented
        return (self.n_bottom == other.n_bottom and self.n_top == other.n_top
                and self._terms == other._terms)

    def __hash__(self):
        return hash((self.n_bottom, self.n_top,
                     tuple(sorted((m._hash, hash(c)) for m, c in self._terms.items()))))

    # -- linear structure ----------------------------------------------------

    def _require_same_boundary(self, other: "Morphism") -> None:
        if self.n_bottom != other.n_bottom or self.n_top != other.n_top:
            raise BoundaryMismatchError(
                f"TL({self.n_bottom},{self.n_top}) and "
                f"TL({other.n_bottom},{other.n_top}) terms cannot be combined")

    def __add__(self, other: "Morphism") -> "Morphism":
        if not isinstance(other, Morphism):
            return NotImplemented
        self._require_same_boundary(other)
        data = dict(self._terms)
        for mat, c in other._terms.items():
            s = data.get(mat)
            s = c if s is None else s + c
            if s.is_zero:
                data.pop(mat, None)
            else:
                data[mat] = s
        return _raw(self.n_bottom, self.n_top, data)

    def __sub__(self, other: "Morphism") -> "Morphism":
        if not isinstance(other, Morphism):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "Morphism":
        return _raw(self.n_bottom, self.n_top,
                    {m: -c for m, c in self._terms.items()})

    def __mul__(self, scalar) -> "Morphism":
        scalar = _as_scalar(scalar)
        if scalar.is_zero:
            return Morphism.zero(self.n_bottom, self.n_top)
        return _raw(self.n_bottom, self.n_top,
                    {m: c * scalar for m, c in self._terms.items()})

    __rmul__ = __mul__

    # -- categorical operations ----------------------------------------------

    def compose(self, other: "Morphism") -> "Morphism":
        """Stack other on top of self; closed loops become factors of [2].

        Runs over common denominators so the inner loop is pure Laurent
        arithmetic; each output coefficient is reduced once at the end.
        """
        if self.n_top != other.n_bottom:
            raise BoundaryMismatchError(
                f"cannot glue top of TL({self.n_bottom},{self.n_top}) to "
                f"bottom of TL({other.n_bottom},{other.n_top})")
        if not self._terms or not other._terms:
            return _raw(self.n_bottom, other.n_top, {})
        den1, nums1 = common_denominator(list(self._terms.values()))
        den2, nums2 = common_denominator(list(other._terms.values()))
        acc: dict[Matching, LaurentPoly] = {}
        for da, na in zip(self._terms, nums1):
            for db, nb in zip(other._terms, nums2):
                glued, loops = diagrams.compose(da, db)
                p = na * nb
                if loops:
                    p = p * loop_factor(loops)
                prev = acc.get(glued)
                acc[glued] = p if prev is None else prev + p
        den = den1 * den2
        out = {}
        for mat, num in acc.items():
            if not num.is_zero:
                out[mat] = Scalar(num, den)
        return _raw(self.n_bottom, other.n_top, out)

    def tensor(self, other: "Morphism") -> "Morphism":
        """Place other to the right of self."""
        acc: dict[Matching, Scalar] = {}
        for da, ca in self._terms.items():
            for db, cb in other._terms.items():
                acc[diagrams.tensor(da, db)] = ca * cb
        return _raw(self.n_bottom + other.n_bottom,
                    self.n_top + other.n_top, acc)

    def reflect(self) -> "Morphism":
        """Flip every diagram upside down, keeping coefficients."""
        return _raw(self.n_top, self.n_bottom,
                    {diagrams.reflect(m): c for m, c in self._terms.items()})

    def through_degree(self) -> int:
        """Maximum through-degree over the support; undefined for zero."""
        if not self._terms:
            raise ValueError("through-degree of the zero morphism is undefined")
        return max(diagrams.through_degree(m) for m in self._terms)

    def is_idempotent(self) -> bool:
        if self.n_bottom != self.n_top:
            raise BoundaryMismatchError(
                "idempotence needs equal bottom and top boundaries")
        return self.compose(self) == self

    # -- rendering ------------------------------------------------------------

    def __str__(self):
        if not self._terms:
            return f"0 of TL({self.n_bottom},{self.n_top})"
        return " + ".join(f"({c}) * [{m}]" for m, c in self.terms())

    def __repr__(self):
        return (f"Morphism({self.n_bottom}, {self.n_top}, "
                f"{len(self._terms)} terms)")

    def to_json_dict(self) -> dict:
        return {
            "bottom": self.n_bottom,
            "top": self.n_top,
            "terms": [{"matching": m.to_json_dict(), "coeff": c.to_json_dict()}
                      for m, c in self.terms()],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "Morphism":
        terms = [(Matching.from_json_dict(t["matching"]),
                  Scalar.from_json_dict(t["coeff"])) for t in data["terms"]]
        return cls(int(data["bottom"]), int(data["top"]), terms)


def _raw(n_bottom: int, n_top: int, data: dict) -> Morphism:
    m = object.__new__(Morphism)
    object.__setattr__(m, "n_bottom", n_bottom)
    object.__setattr__(m, "n_top", n_top)
    object.__setattr__(m, "_terms", data)
    return m


def _as_scalar(x) -> Scalar:
    s = _coerce_scalar(x)
    if s is NotImplemented:
        raise TypeError(f"cannot use {type(x).__name__} as a coefficient")
    return s


def lincomb(pairs: Iterable[tuple]) -> Morphism:
    """Scalar-linear combination of morphisms sharing one boundary."""
    pairs = list(pairs)
    if not pairs:
        raise ValueError("linear combination of an empty list has no boundary")
    out = None
    for coeff, mor in pairs:
        piece = mor * coeff
        out = piece if out is None else out + piece
    return out
