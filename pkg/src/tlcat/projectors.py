"""Jones-Wenzl and isotypic projectors, and verifiers for their identities.

Builds the Jones-Wenzl projector p_n by the Wenzl recurrence, the sequence
elements t, q, f, p indexed by admissible sign sequences, and the isotypic
projectors p_{n,k}. The verify_* functions mechanically check, by exact
arithmetic over the full diagram basis, the identities these elements
satisfy: resolution of identity, orthogonality, the through-degree
characterization, branching, slide-through, and lower-strand expansion.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from . import diagrams
from .diagrams import Matching, enumerate_basis
from .morphisms import Morphism
from .qring import Scalar, qratio
from .sequences import SignSeq, enumerate_seqs


class InadmissibleSequenceError(ValueError):
    """A construction indexed by sign sequences was given an inadmissible one."""


class ProjectorCache:
    """Keyed memo for constructed projectors.

    A cached value must always equal the freshly recomputed one; subclasses
    may add persistence by overriding _load and _save.
    """

    def __init__(self):
        self._store: dict[str, Morphism] = {}

    def get_or_build(self, key: str, build: Callable[[], Morphism]) -> Morphism:
        hit = self._store.get(key)
        if hit is not None:
            return hit
        loaded = self._load(key)
        if loaded is None:
            loaded = build()
            self._save(key, loaded)
        self._store[key] = loaded
        return loaded

    def _load(self, key: str) -> Optional[Morphism]:
        return None

    def _save(self, key: str, value: Morphism) -> None:
        pass

    def clear(self) -> None:
        self._store.clear()

    def keys(self) -> list[str]:
        return sorted(self._store)

    def __len__(self) -> int:
        return len(self._store)


_default_cache = ProjectorCache()


def _cache(cache: ProjectorCache | None) -> ProjectorCache:
    return _default_cache if cache is None else cache


_CUP = Matching(0, 2, [(0, 1)])


def jones_wenzl(n: int, cache: ProjectorCache | None = None) -> Morphism:
    """The Jones-Wenzl projector p_n, expanded in the diagram basis.

    Wenzl recurrence: p_1 = 1 and
    p_n = (p_{n-1} u 1) - ([n-1]/[n]) (p_{n-1} u 1) e_{n-1} (p_{n-1} u 1).
    p_0 is the empty-diagram identity of TL_0.
    """
    if n < 0:
        raise ValueError("strand count must be nonnegative")
    c = _cache(cache)

    def level(m: int) -> Morphism:
        def build() -> Morphism:
            if m <= 1:
                return Morphism.identity(m)
            prev = level(m - 1).tensor(Morphism.identity(1))
            e = Morphism.of(diagrams.elementary(m, m - 1))
            return prev - qratio(m - 1, m) * prev.compose(e).compose(prev)
        return c.get_or_build(f"jw:{m}", build)

    return level(n)


def top_half(eps: SignSeq, cache: ProjectorCache | None = None) -> Morphism:
    """The element t indexed by eps, a morphism from |eps| points to l(eps) points.

    Built inductively: appending +1 feeds a Jones-Wenzl box on all through
    strands plus the new strand; appending -1 bends the new strand into a cup
    against the rightmost through strand, with a Jones-Wenzl box on the rest.
    """
    if not eps.is_admissible():
        raise InadmissibleSequenceError(f"{eps} has a negative prefix sum")
    c = _cache(cache)

    def build() -> Morphism:
        if eps.length == 1:
            return Morphism.identity(1)
        head = eps.head()
        t = top_half(head, c).tensor(Morphism.identity(1))
        k = head.size
        if eps.entries[-1] == 1:
            return jones_wenzl(k + 1, c).compose(t)
        bottom = jones_wenzl(k - 1, c).tensor(Morphism.of(_CUP))
        return bottom.compose(t)

    return c.get_or_build(f"top:{eps}", build)


def q_elem(eps: SignSeq, cache: ProjectorCache | None = None) -> Morphism:
    """The vertically symmetric element q = reflect(t) followed by t."""
    c = _cache(cache)

    def build() -> Morphism:
        t = top_half(eps, c)
        return t.reflect().compose(t)

    if not eps.is_admissible():
        raise InadmissibleSequenceError(f"{eps} has a negative prefix sum")
    return c.get_or_build(f"qeps:{eps}", build)


def f_coeff(eps: SignSeq) -> Scalar:
    """The normalizing scalar f for eps.

    f((1)) = 1; appending +1 keeps f; appending -1 multiplies by [k]/[k+1]
    where k is the size before appending.
    """
    if not eps.is_admissible():
        raise InadmissibleSequenceError(f"{eps} has a negative prefix sum")
    f = Scalar.one()
    size = eps.entries[0]
    for e in eps.entries[1:]:
        if e == -1:
            f = f * qratio(size, size + 1)
        size += e
    return f


def p_eps(eps: SignSeq, cache: ProjectorCache | None = None) -> Morphism:
    """The idempotent p = f * q indexed by eps."""
    c = _cache(cache)

    def build() -> Morphism:
        return f_coeff(eps) * q_elem(eps, c)

    if not eps.is_admissible():
        raise InadmissibleSequenceError(f"{eps} has a negative prefix sum")
    return c.get_or_build(f"peps:{eps}", build)


def higher_projector(n: int, k: int, cache: ProjectorCache | None = None) -> Morphism:
    """The isotypic projector p_{n,k}: the sum of p over all eps of size k.

    p_{n,n} equals the Jones-Wenzl projector p_n; p_{0,0} is the identity
    of TL_0.
    """
    if n == 0:
        if k != 0:
            raise ValueError(f"size {k} out of range for 0 strands")
        return Morphism.identity(0)
    if not 0 <= k <= n:
        raise ValueError(f"size {k} out of range 0..{n}")
    if (n - k) % 2:
        raise ValueError(f"size {k} has the wrong parity for {n} strands")
    c = _cache(cache)

    def build() -> Morphism:
        out = Morphism.zero(n)
        for eps in enumerate_seqs(n, k):
            out = out + p_eps(eps, c)
        return out

    return c.get_or_build(f"pnk:{n}:{k}", build)


def _pnk_or_zero(n: int, k: int, cache: ProjectorCache | None) -> Morphism:
    """p_{n,k}, with the convention that it is zero when k exceeds n."""
    if k > n:
        return Morphism.zero(n)
    return higher_projector(n, k, cache)


def factor_through(d: Matching) -> tuple[Matching, Matching]:
    """Canonical factorization of d through its through-strands.

    Returns (bottom, top) with bottom in TL(n, tau) keeping d's caps and
    top in TL(tau, m) keeping d's cups, so that composing bottom then top
    reproduces d with no loops.
    """
    n, m = d.n_bottom, d.n_top
    caps = [(a, b) for a, b in d.pairs if b < n]
    cups = [(a, b) for a, b in d.pairs if a >= n]
    through = sorted((a, b) for a, b in d.pairs if a < n <= b)
    tau = len(through)

    bottom_pairs = list(caps)
    for s, (b_pt, _) in enumerate(through):
        bottom_pairs.append((b_pt, n + tau - 1 - s))
    bottom = Matching(n, tau, bottom_pairs)

    def top_relabel(label: int) -> int:
        return tau + m - 1 - d.top_position(label)

    top_pairs = [(top_relabel(a), top_relabel(b)) for a, b in cups]
    for s, (_, t_pt) in enumerate(through):
        top_pairs.append((s, top_relabel(t_pt)))
    top = Matching(tau, m, top_pairs)
    return bottom, top


# ---------------------------------------------------------------------------
# Verifiers
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CheckResult:
    """Outcome of one verified identity instance."""

    check: str
    params: dict
    passed: bool
    witness: str | None = None

    def to_json_dict(self) -> dict:
        out = {"check": self.check, "params": self.params, "pass": self.passed}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


def all_pass(results: list[CheckResult]) -> bool:
    return all(r.passed for r in results)


def verify_branching(eps: SignSeq, cache: ProjectorCache | None = None) -> bool:
    """Check p u 1 = p(+1) + p(-1) and q u 1 = q(+1) + ([k]/[k+1]) q(-1).

    Appending -1 to a size-0 sequence leaves the index set; that term is
    zero by convention, matching the vanishing coefficient [0]/[1].
    """
    c = _cache(cache)
    n1 = eps.length + 1
    strand = Morphism.identity(1)
    plus = eps.append(1)
    minus = eps.append(-1)
    minus_ok = minus.is_admissible()
    k = eps.size

    p_side = p_eps(eps, c).tensor(strand)
    p_rhs = p_eps(plus, c) + (p_eps(minus, c) if minus_ok else Morphism.zero(n1))
    if p_side != p_rhs:
        return False

    q_side = q_elem(eps, c).tensor(strand)
    q_minus = q_elem(minus, c) if minus_ok else Morphism.zero(n1)
    q_rhs = q_elem(plus, c) + qratio(k, k + 1) * q_minus
    return q_side == q_rhs


def verify_resolution(n: int, cache: ProjectorCache | None = None) -> list[CheckResult]:
    """Resolution of identity and orthogonality on n strands.

    Checks that the p indexed by admissible sequences sum to the identity,
    are idempotent and mutually orthogonal, and that the isotypic p_{n,k}
    form a complete system of orthogonal idempotents.
    """
    c = _cache(cache)
    seqs = enumerate_seqs(n)
    ps = {eps: p_eps(eps, c) for eps in seqs}
    ident = Morphism.identity(n)
    results = []

    total = Morphism.zero(n)
    for p in ps.values():
        total = total + p
    results.append(CheckResult("resolution.sum", {"n": n}, total == ident,
                               None if total == ident else str(total - ident)))

    for eps, p in ps.items():
        ok = p.is_idempotent()
        results.append(CheckResult("resolution.idempotent",
                                   {"n": n, "eps": str(eps)}, ok))
    for i, ei in enumerate(seqs):
        for ej in seqs[i + 1:]:
            ok = (ps[ei].compose(ps[ej]).is_zero
                  and ps[ej].compose(ps[ei]).is_zero)
            results.append(CheckResult(
                "resolution.orthogonal",
                {"n": n, "eps": str(ei), "nu": str(ej)}, ok))

    ks = list(range(n % 2, n + 1, 2))
    pnk = {k: higher_projector(n, k, c) for k in ks}
    total = Morphism.zero(n)
    for p in pnk.values():
        total = total + p
    results.append(CheckResult("resolution.isotypic_sum", {"n": n}, total == ident))
    for i, ki in enumerate(ks):
        for kj in ks[i:]:
            prod = pnk[ki].compose(pnk[kj])
            ok = prod == pnk[ki] if ki == kj else prod.is_zero
            results.append(CheckResult(
                "resolution.isotypic_orthogonal",
                {"n": n, "k": ki, "l": kj}, ok))
    return results


def verify_characterization(n: int, k: int,
                            cache: ProjectorCache | None = None) -> list[CheckResult]:
    """The three defining properties of p_{n,k}, quantified over basis diagrams.

    (1) its through-degree is exactly k; (2) diagrams of through-degree
    below k kill it on either side; (3) composing with a through-degree-k
    diagram fixes that diagram up to terms of lower through-degree.
    """
    c = _cache(cache)
    p = higher_projector(n, k, c)
    results = [CheckResult("characterization.through_degree",
                           {"n": n, "k": k}, p.through_degree() == k)]
    for l in range(n % 2, n + 1, 2):
        for a in enumerate_basis(n, l):
            ta = diagrams.through_degree(a)
            am = Morphism.of(a)
            if ta < k:
                ok = (p.compose(am).is_zero
                      and Morphism.of(diagrams.reflect(a)).compose(p).is_zero)
                results.append(CheckResult(
                    "characterization.kills_low",
                    {"n": n, "k": k, "l": l, "a": str(a)}, ok))
            elif ta == k:
                rem = p.compose(am) - am
                ok = rem.is_zero or rem.through_degree() < k
                results.append(CheckResult(
                    "characterization.fixes",
                    {"n": n, "k": k, "l": l, "a": str(a)}, ok,
                    None if ok else str(rem)))
    return results


def verify_slide_through(n: int, m: int, k: int,
                         cache: ProjectorCache | None = None) -> bool:
    """Check a p_{n,k} = p_{m,k} a for every basis diagram a in TL(n, m)."""
    if (n - m) % 2:
        raise ValueError(f"TL({n},{m}) is empty: parity mismatch")
    if not 0 <= k <= min(n, m) or (n - k) % 2:
        raise ValueError(f"size {k} invalid for strands {n} and {m}")
    c = _cache(cache)
    pn = higher_projector(n, k, c)
    pm = higher_projector(m, k, c)
    for a in enumerate_basis(n, m):
        am = Morphism.of(a)
        if pn.compose(am) != am.compose(pm):
            return False
    return True


def verify_lower_expansion(n: int, k: int,
                           cache: ProjectorCache | None = None) -> bool:
    """Check the expansion of p_{n,k} through lower-strand projectors.

    Writes p_n = 1 - sum of f_D D over non-identity diagrams and checks
    p_{n,k} = sum of f_D (bottom_D then p_{tau(D),k} then top_D) with the
    canonical factorization of each D through its through-strands.
    """
    if not 0 <= k < n or (n - k) % 2:
        raise ValueError(f"expansion needs 0 <= k < n with matching parity")
    c = _cache(cache)
    pn = jones_wenzl(n, c)
    ident = diagrams.identity(n)
    acc = Morphism.zero(n)
    for d, coeff in pn.terms():
        if d == ident:
            continue
        bottom, top = factor_through(d)
        tau = diagrams.through_degree(d)
        mid = _pnk_or_zero(tau, k, c)
        piece = Morphism.of(bottom).compose(mid).compose(Morphism.of(top))
        acc = acc + (-coeff) * piece
    return acc == higher_projector(n, k, c)
