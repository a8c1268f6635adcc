"""Independent oracles used by the tests.

Everything here is deliberately written without the library's own
arithmetic or traversal code, so a test comparing against these functions
is a genuine two-route check.
"""

from __future__ import annotations

from fractions import Fraction


def catalan(n: int) -> int:
    """Catalan numbers by the convolution recurrence."""
    table = [1]
    for m in range(n):
        table.append(sum(table[i] * table[m - i] for i in range(m + 1)))
    return table[n]


def long_division_series(num: dict[int, int], den: dict[int, int],
                         order: int) -> list[tuple[int, int]]:
    """Series of num/den by naive long division on exponent dictionaries."""
    dv = min(den)
    nv = min(num) if num else 0
    # normalize: denominator starting at exponent 0
    den0 = {e - dv: c for e, c in den.items()}
    num0 = {e - dv: Fraction(c) for e, c in num.items()}
    start = nv - dv
    out = []
    coeffs: dict[int, Fraction] = {}
    for e in range(start, order + 1):
        acc = num0.get(e, Fraction(0))
        for j, dj in den0.items():
            if j > 0 and (e - j) in coeffs:
                acc -= dj * coeffs[e - j]
        c = acc / den0[0]
        coeffs[e] = c
        if c:
            assert c.denominator == 1
            out.append((e, int(c)))
    return out


def closure_loop_count(n: int, pairs) -> int:
    """Loops in the side closure of a TL(n, n) diagram, by direct walking.

    The closure joins the point labeled x to the point labeled 2n-1-x;
    walking chord / closure-arc alternately decomposes the 2n points into
    cycles.
    """
    partner = {}
    for a, b in pairs:
        partner[a] = b
        partner[b] = a
    unvisited = set(range(2 * n))
    loops = 0
    while unvisited:
        loops += 1
        x = next(iter(unvisited))
        while x in unvisited:
            unvisited.discard(x)
            y = partner[x]
            unvisited.discard(y)
            x = 2 * n - 1 - y
    return loops


def quantum_int_dict(n: int) -> dict[int, int]:
    """[n] as an exponent dictionary, straight from the defining sum."""
    return {e: 1 for e in range(-(n - 1), n, 2)}
