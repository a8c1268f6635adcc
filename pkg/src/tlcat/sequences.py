"""Admissible sign sequences and the dominance order.

A sign sequence is a nonempty tuple of +1/-1 entries. It is admissible when
every prefix sum is nonnegative; admissible sequences of length n index the
minimal idempotents of TL_n, grouped by size (the total sum) into the
isotypic pieces.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class SignSeq:
    """A nonempty tuple of +1/-1 entries."""

    entries: tuple[int, ...]

    def __post_init__(self):
        if not self.entries:
            raise ValueError("empty sign sequence (length 0 is excluded)")
        if any(e not in (1, -1) for e in self.entries):
            raise ValueError(f"entries must be +1 or -1: {self.entries}")
        object.__setattr__(self, "entries", tuple(self.entries))

    @property
    def length(self) -> int:
        return len(self.entries)

    @property
    def size(self) -> int:
        return sum(self.entries)

    def prefix_sums(self) -> tuple[int, ...]:
        out, s = [], 0
        for e in self.entries:
            s += e
            out.append(s)
        return tuple(out)

    def is_admissible(self) -> bool:
        s = 0
        for e in self.entries:
            s += e
            if s < 0:
                return False
        return True

    def dominates(self, other: "SignSeq") -> bool:
        """True when every prefix sum of self is >= the matching one of other."""
        if self.length != other.length:
            raise ValueError(
                f"dominance compares equal lengths, got {self.length} and {other.length}")
        s = t = 0
        for a, b in zip(self.entries, other.entries):
            s += a
            t += b
            if s < t:
                return False
        return True

    def append(self, sign: int) -> "SignSeq":
        if sign not in (1, -1):
            raise ValueError("appended sign must be +1 or -1")
        return SignSeq(self.entries + (sign,))

    def head(self) -> "SignSeq":
        """The sequence with the last entry removed."""
        if self.length == 1:
            raise ValueError("cannot shorten a length-1 sequence")
        return SignSeq(self.entries[:-1])

    def __str__(self):
        return "(" + ",".join(str(e) for e in self.entries) + ")"

    def __iter__(self):
        return iter(self.entries)

    @classmethod
    def parse(cls, text: str) -> "SignSeq":
        """Parse forms like '(1,1,-1,-1)' or '1,-1' or '+-+-'."""
        body = text.strip().strip("()").strip()
        if not body:
            raise ValueError(f"cannot parse sign sequence from {text!r}")
        if set(body) <= {"+", "-"}:
            return cls(tuple(1 if ch == "+" else -1 for ch in body))
        try:
            entries = tuple(int(p) for p in body.replace(" ", "").split(","))
        except ValueError as exc:
            raise ValueError(f"cannot parse sign sequence from {text!r}") from exc
        return cls(entries)

    def to_json(self) -> list[int]:
        return list(self.entries)


def enumerate_seqs(n: int, k: int | None = None) -> list[SignSeq]:
    """All admissible sequences of length n (and size k if given).

    Output is lexicographic with +1 before -1, a linear extension of the
    dominance order from most dominant down.
    """
    if n < 1:
        raise ValueError(f"sequence length must be at least 1, got {n}")
    if k is not None:
        if not 0 <= k <= n:
            raise ValueError(f"size {k} out of range 0..{n}")
        if (n - k) % 2:
            raise ValueError(f"size {k} has the wrong parity for length {n}")
    out: list[SignSeq] = []
    stack: list[int] = []

    def rec(s: int) -> None:
        pos = len(stack)
        if pos == n:
            out.append(SignSeq(tuple(stack)))
            return
        rem = n - pos - 1
        for step in (1, -1):
            s2 = s + step
            if s2 < 0:
                continue
            if k is not None and (abs(k - s2) > rem or (k - s2 - rem) % 2):
                continue
            stack.append(step)
            rec(s2)
            stack.pop()

    rec(0)
    return out
