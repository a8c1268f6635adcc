"""Braids resolved into the diagram algebra, full twists, and the Markov trace.

Crossings are resolved skein-style: a positive crossing on strands i, i+1
becomes 1 - q^-1 e_i and a negative one becomes 1 - q e_i. No framing
monomial is applied, so full-twist eigenvalues are meaningful up to an
overall normalization; their ratios q^(2(k-l)) between isotypic projectors
are normalization-free.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from . import diagrams
from .diagrams import BoundaryMismatchError, Matching
from .morphisms import Morphism
from .qring import Scalar, loop_factor


class NotAnEigenvectorError(ValueError):
    """The morphism does not act on the candidate by a single scalar."""


@dataclass(frozen=True)
class BraidWord:
    """A word in the braid group: (generator index, sign) letters on n strands."""

    strands: int
    letters: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.strands < 0:
            raise ValueError("strand count must be nonnegative")
        object.__setattr__(self, "letters", tuple(
            (int(i), int(s)) for i, s in self.letters))
        for i, s in self.letters:
            if not 1 <= i <= self.strands - 1:
                raise ValueError(
                    f"generator index {i} out of range 1..{self.strands - 1}")
            if s not in (1, -1):
                raise ValueError(f"crossing sign must be +1 or -1, got {s}")

    def __str__(self):
        return " ".join(f"s{i}" if s == 1 else f"s{i}^-1"
                        for i, s in self.letters) or "(empty)"

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands,
                         tuple((i, -s) for i, s in reversed(self.letters)))

    @classmethod
    def parse(cls, text: str, strands: int | None = None) -> "BraidWord":
        """Parse words like 's1 s2 s1^-1' or '(s1 s2)^3'.

        When strands is omitted it is inferred as one more than the largest
        generator index.
        """
        letters = _parse_word(_tokenize(text))
        if strands is None:
            strands = max((i for i, _ in letters), default=1) + 1
        return cls(strands, tuple(letters))


_TOKEN = re.compile(r"\s*(s\d+|\(|\)|\^-?\d+)")


def _tokenize(text: str) -> list[str]:
    tokens, pos = [], 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise ValueError(f"cannot parse braid word at {text[pos:]!r}")
            break
        tokens.append(m.group(1))
        pos = m.end()
    return tokens


def _parse_word(tokens: list[str]) -> list[tuple[int, int]]:
    out, stack = [], []
    idx = 0
    while idx < len(tokens):
        tok = tokens[idx]
        if tok == "(":
            stack.append(out)
            out = []
        elif tok == ")":
            if not stack:
                raise ValueError("unbalanced ')' in braid word")
            group = out
            out = stack.pop()
            power = 1
            if idx + 1 < len(tokens) and tokens[idx + 1].startswith("^"):
                idx += 1
                power = int(tokens[idx][1:])
            out.extend(_repeat(group, power))
        elif tok.startswith("s"):
            letter = (int(tok[1:]), 1)
            power = 1
            if idx + 1 < len(tokens) and tokens[idx + 1].startswith("^"):
                idx += 1
                power = int(tokens[idx][1:])
            out.extend(_repeat([letter], power))
        else:
            raise ValueError(f"misplaced token {tok!r} in braid word")
        idx += 1
    if stack:
        raise ValueError("unbalanced '(' in braid word")
    return out


def _repeat(letters: list[tuple[int, int]], power: int) -> list[tuple[int, int]]:
    if power >= 0:
        return letters * power
    inverse = [(i, -s) for i, s in reversed(letters)]
    return inverse * (-power)


def crossing(n: int, i: int, sign: int) -> Morphism:
    """Skein resolution of a single crossing of strands i, i+1 in TL_n."""
    if sign not in (1, -1):
        raise ValueError(f"crossing sign must be +1 or -1, got {sign}")
    e = Morphism.of(diagrams.elementary(n, i))
    return Morphism.identity(n) - Scalar.q_power(-sign) * e


def resolve_braid(w: BraidWord) -> Morphism:
    """Resolve every letter and compose bottom to top."""
    out = Morphism.identity(w.strands)
    for i, s in w.letters:
        out = out.compose(crossing(w.strands, i, s))
    return out


def full_twist(n: int) -> BraidWord:
    """The full twist on n strands: (s1 s2 ... s(n-1))^n, all positive."""
    if n < 2:
        raise ValueError(f"the full twist needs at least 2 strands, got {n}")
    round_ = [(i, 1) for i in range(1, n)]
    return BraidWord(n, tuple(round_ * n))


def eigenvalue_on(m: Morphism, p: Morphism) -> Scalar:
    """The scalar by which m acts on p, when m composed with p is a multiple of p."""
    if m.n_bottom != m.n_top or m.n_bottom != p.n_bottom or p.n_bottom != p.n_top:
        raise BoundaryMismatchError("eigenvalue needs square morphisms on one boundary")
    if p.is_zero:
        raise ValueError("eigenvalue on the zero morphism is undefined")
    product = p.compose(m)
    mat, coeff = p.terms()[0]
    lam = product.coeff(mat) / coeff
    if product != lam * p:
        raise NotAnEigenvectorError(
            "composite is not a scalar multiple of the candidate")
    return lam


def markov_trace(m: Morphism) -> Scalar:
    """Close bottom point i to top point i around the side; loops become [2].

    Linear extension of diagram closure: a diagram contributes [2] to the
    power of the number of loops in its closure.
    """
    if m.n_bottom != m.n_top:
        raise BoundaryMismatchError("the Markov trace needs a square boundary")
    total = Scalar.zero()
    for mat, coeff in m.terms():
        total = total + coeff * loop_factor(_closure_loops(mat))
    return total


def _closure_loops(mat: Matching) -> int:
    n = mat.n_bottom
    partner = {}
    for a, b in mat.pairs:
        partner[a] = b
        partner[b] = a
    loops = 0
    seen = set()
    for start in range(2 * n):
        if start in seen:
            continue
        loops += 1
        x = start
        while x not in seen:
            seen.add(x)
            y = partner[x]  # travel the chord
            seen.add(y)
            x = 2 * n - 1 - y  # travel the closure arc joining position i to i
    return loops


def trace_pairing(a: Morphism, b: Morphism) -> Scalar:
    """Symmetric bilinear pairing: the Markov trace of reflect(a) composed with b."""
    if a.n_bottom != b.n_bottom or a.n_top != b.n_top:
        raise BoundaryMismatchError("pairing needs morphisms with equal boundaries")
    return markov_trace(a.reflect().compose(b))
