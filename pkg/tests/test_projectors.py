import itertools

import pytest

from tlcat.diagrams import (
    Matching,
    compose,
    elementary,
    enumerate_basis,
    identity,
    tensor,
)
from tlcat.morphisms import Morphism
from tlcat.projectors import (
    CheckResult,
    InadmissibleSequenceError,
    ProjectorCache,
    all_pass,
    f_coeff,
    factor_through,
    higher_projector,
    jones_wenzl,
    p_eps,
    q_elem,
    top_half,
    verify_branching,
    verify_characterization,
    verify_lower_expansion,
    verify_resolution,
    verify_slide_through,
)
from tlcat.qring import Scalar, qratio
from tlcat.sequences import SignSeq, enumerate_seqs


def S(text):
    return SignSeq.parse(text)


CUP = Matching(0, 2, [(0, 1)])


# -- Jones-Wenzl --------------------------------------------------------------

def test_jw_base_cases():
    assert jones_wenzl(0) == Morphism.identity(0)
    assert jones_wenzl(1) == Morphism.identity(1)
    p2 = jones_wenzl(2)
    assert p2 == Morphism.identity(2) - qratio(1, 2) * Morphism.of(elementary(2, 1))


def test_jw_uniqueness_axioms():
    # identity coefficient 1, rest lives on non-identity diagrams,
    # and every generator kills the projector on both sides
    for n in range(1, 6):
        p = jones_wenzl(n)
        assert p.coeff(identity(n)) == Scalar.one()
        rest = p - Morphism.identity(n)
        if not rest.is_zero:
            assert identity(n) not in rest.support()
        for i in range(1, n):
            e = Morphism.of(elementary(n, i))
            assert e.compose(p).is_zero
            assert p.compose(e).is_zero


def test_jw_idempotent():
    for n in range(1, 6):
        assert jones_wenzl(n).is_idempotent()


def test_jw_reflection_symmetric():
    for n in range(1, 6):
        p = jones_wenzl(n)
        assert p.reflect() == p


def test_jw_support_size_is_full_basis():
    # every basis diagram appears in p_n with a nonzero coefficient
    for n in range(1, 6):
        assert len(jones_wenzl(n)) == len(enumerate_basis(n, n))


def test_jw_equals_top_isotypic_projector():
    for n in range(1, 5):
        assert jones_wenzl(n) == higher_projector(n, n)


def test_jw_negative_rejected():
    with pytest.raises(ValueError):
        jones_wenzl(-1)


def _solve_annihilation_system(n):
    """Second route to p_n: solve the linear system for an element with
    identity coefficient 1 killed by every generator on both sides, by
    Gaussian elimination over the exact scalar field."""
    basis = enumerate_basis(n, n)
    ident = identity(n)
    unknowns = [m for m in basis if m != ident]
    cols = {d: j for j, d in enumerate(unknowns)}

    rows, rhs = [], []
    for i in range(1, n):
        e = Morphism.of(elementary(n, i))
        for side in ("right", "left"):
            images = {}
            for d in basis:
                dm = Morphism.of(d)
                images[d] = dm.compose(e) if side == "right" else e.compose(dm)
            for b in basis:
                row = [images[d].coeff(b) for d in unknowns]
                free = images[ident].coeff(b)
                if free.is_zero and all(v.is_zero for v in row):
                    continue
                rows.append(row)
                rhs.append(-free)

    aug = [row + [b] for row, b in zip(rows, rhs)]
    nvars = len(unknowns)
    r = 0
    for col in range(nvars):
        piv = next(i for i in range(r, len(aug)) if not aug[i][col].is_zero)
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = aug[r][col].inverse()
        aug[r] = [v * inv for v in aug[r]]
        for i in range(len(aug)):
            if i != r and not aug[i][col].is_zero:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
        r += 1
    for i in range(r, len(aug)):
        assert all(v.is_zero for v in aug[i]), "inconsistent system"
    solution = Morphism(n, n, [(ident, Scalar.one())]
                        + [(d, aug[cols[d]][-1]) for d in unknowns])
    return solution


@pytest.mark.parametrize("n", [2, 3, 4])
def test_jw_agrees_with_annihilation_linear_system(n):
    # the recurrence and the solved system must produce the same element,
    # and the system having full rank certifies uniqueness
    assert _solve_annihilation_system(n) == jones_wenzl(n)


# -- sequence elements ----------------------------------------------------------

def test_top_half_base_cases():
    assert top_half(S("(1)")) == Morphism.identity(1)
    assert top_half(S("(1,-1)")) == Morphism.of(CUP)
    assert top_half(S("(1,1)")) == jones_wenzl(2)


def test_top_half_boundary():
    for eps in enumerate_seqs(5):
        t = top_half(eps)
        assert (t.n_bottom, t.n_top) == (eps.size, eps.length)
        assert t.through_degree() == eps.size


def test_q_elem_examples():
    assert q_elem(S("(1)")) == Morphism.identity(1)
    assert q_elem(S("(1,1)")) == jones_wenzl(2)
    e1e3 = Morphism.of(tensor(elementary(2, 1), elementary(2, 1)))
    assert q_elem(S("(1,-1,1,-1)")) == e1e3


def test_q_elem_vertically_symmetric():
    for n in range(1, 6):
        for eps in enumerate_seqs(n):
            q = q_elem(eps)
            assert q.reflect() == q


def test_f_coeff_recursion_values():
    assert f_coeff(S("(1)")) == Scalar.one()
    assert f_coeff(S("(1,-1)")) == qratio(1, 2)
    assert f_coeff(S("(1,1,1,-1)")) == qratio(3, 4)
    assert f_coeff(S("(1,-1,1,1)")) == qratio(1, 2)
    assert f_coeff(S("(1,1,-1,1)")) == qratio(2, 3)
    assert f_coeff(S("(1,-1,1,-1)")) == qratio(1, 2) ** 2
    assert f_coeff(S("(1,1,-1,-1)")) == qratio(1, 3)


def test_p_eps_examples():
    assert p_eps(S("(1)")) == Morphism.identity(1)
    expected = qratio(1, 2) * Morphism.of(elementary(2, 1))
    assert p_eps(S("(1,-1)")) == expected
    assert p_eps(S("(1,-1,1,1)")) == qratio(1, 2) * q_elem(S("(1,-1,1,1)"))


def test_p_eps_idempotent():
    for n in range(1, 5):
        for eps in enumerate_seqs(n):
            assert p_eps(eps).is_idempotent()


def test_q_elems_mutually_orthogonal():
    for n in range(1, 6):
        seqs = enumerate_seqs(n)
        for a, b in itertools.combinations(seqs, 2):
            assert q_elem(a).compose(q_elem(b)).is_zero
            assert q_elem(b).compose(q_elem(a)).is_zero


def test_inadmissible_sequences_rejected():
    bad = S("(1,-1,-1)")
    for fn in (top_half, q_elem, p_eps):
        with pytest.raises(InadmissibleSequenceError):
            fn(bad)
    with pytest.raises(InadmissibleSequenceError):
        f_coeff(bad)


# -- isotypic projectors -----------------------------------------------------------

def test_higher_projector_examples():
    assert higher_projector(2, 0) == qratio(1, 2) * Morphism.of(elementary(2, 1))
    assert higher_projector(0, 0) == Morphism.identity(0)
    # the two size-0 pieces on four strands
    p40 = higher_projector(4, 0)
    expected = qratio(1, 2) ** 2 * q_elem(S("(1,-1,1,-1)")) \
        + qratio(1, 3) * q_elem(S("(1,1,-1,-1)"))
    assert p40 == expected
    # the three size-2 pieces on four strands
    p42 = higher_projector(4, 2)
    expected = qratio(3, 4) * q_elem(S("(1,1,1,-1)")) \
        + qratio(1, 2) * q_elem(S("(1,-1,1,1)")) \
        + qratio(2, 3) * q_elem(S("(1,1,-1,1)"))
    assert p42 == expected


def test_higher_projector_validation():
    with pytest.raises(ValueError):
        higher_projector(4, 1)
    with pytest.raises(ValueError):
        higher_projector(4, 6)
    with pytest.raises(ValueError):
        higher_projector(0, 2)


def test_higher_projector_through_degree_and_symmetry():
    for n in range(1, 6):
        for k in range(n % 2, n + 1, 2):
            p = higher_projector(n, k)
            assert p.through_degree() == k
            assert p.reflect() == p
            assert p.is_idempotent()


def test_support_factors_through_k():
    # every diagram in the support has through-degree at most k,
    # with at least one exactly k
    from tlcat.diagrams import through_degree
    for n in range(1, 6):
        for k in range(n % 2, n + 1, 2):
            taus = [through_degree(d) for d in higher_projector(n, k).support()]
            assert max(taus) == k and all(t <= k for t in taus)


# -- verifiers -----------------------------------------------------------------------

def test_branching_examples():
    assert verify_branching(S("(1)"))
    assert verify_branching(S("(1,1)"))
    assert verify_branching(S("(1,-1)"))


def test_branching_unfolds_identity_on_two_strands():
    # the length-1 case written out: 1_2 = p_2 + (1/[2]) e_1
    lhs = p_eps(S("(1)")).tensor(Morphism.identity(1))
    assert lhs == Morphism.identity(2)
    assert p_eps(S("(1,1)")) + p_eps(S("(1,-1)")) == lhs


def test_branching_everywhere_short():
    for n in range(1, 4):
        for eps in enumerate_seqs(n):
            assert verify_branching(eps)


def test_resolution_trivial_and_small():
    assert all_pass(verify_resolution(1))
    results = verify_resolution(4)
    assert all_pass(results)
    by_check = {}
    for r in results:
        by_check.setdefault(r.check, []).append(r)
    assert len(by_check["resolution.idempotent"]) == 6
    # six idempotents grouped 1 + 3 + 2 by size
    sizes = {k: len(enumerate_seqs(4, k)) for k in (4, 2, 0)}
    assert sizes == {4: 1, 2: 3, 0: 2}


def test_characterization_cases():
    assert all_pass(verify_characterization(4, 2))
    assert all_pass(verify_characterization(2, 0))
    for n in range(1, 5):
        assert all_pass(verify_characterization(n, n))


def test_characterization_reports_carry_params():
    results = verify_characterization(2, 0)
    checks = {r.check for r in results}
    assert "characterization.through_degree" in checks
    assert "characterization.fixes" in checks
    assert all(r.params["n"] == 2 for r in results)


def test_slide_through_cases():
    assert verify_slide_through(4, 2, 2)
    assert verify_slide_through(3, 1, 1)
    assert verify_slide_through(4, 4, 2)
    assert verify_slide_through(2, 4, 0)
    with pytest.raises(ValueError):
        verify_slide_through(4, 3, 1)
    with pytest.raises(ValueError):
        verify_slide_through(4, 2, 4)


def test_lower_expansion_cases():
    for n, k in [(2, 0), (3, 1), (4, 0), (4, 2)]:
        assert verify_lower_expansion(n, k)
    with pytest.raises(ValueError):
        verify_lower_expansion(4, 4)
    with pytest.raises(ValueError):
        verify_lower_expansion(4, 1)


def test_factor_through_reproduces_diagram():
    for n, m in [(3, 3), (4, 4), (2, 4), (4, 2)]:
        for d in enumerate_basis(n, m):
            bottom, top = factor_through(d)
            assert bottom.n_top == top.n_bottom
            assert compose(bottom, top) == (d, 0)


def test_lower_expansion_against_explicit_two_strand_case():
    # p_2 has a single non-identity term with weight 1/[2]; bending it
    # through zero strands gives exactly the size-0 projector
    cap = Matching(2, 0, [(0, 1)])
    rebuilt = qratio(1, 2) * (
        Morphism.of(cap).compose(Morphism.identity(0)).compose(Morphism.of(CUP)))
    assert rebuilt == higher_projector(2, 0)


# -- cache ---------------------------------------------------------------------------

def test_cache_transparency():
    a = jones_wenzl(4, ProjectorCache())
    b = jones_wenzl(4, ProjectorCache())
    assert a == b == jones_wenzl(4)
    eps = S("(1,1,-1,1)")
    assert p_eps(eps, ProjectorCache()) == p_eps(eps)


def test_cache_reuses_entries():
    calls = []

    class Spy(ProjectorCache):
        def _load(self, key):
            calls.append(key)
            return None

    spy = Spy()
    jones_wenzl(3, spy)
    assert sorted(calls) == ["jw:1", "jw:2", "jw:3"] and len(spy) == 3
    jones_wenzl(3, spy)
    assert len(calls) == 3  # second call served from memory


def test_check_result_json():
    r = CheckResult("x", {"n": 1}, True)
    assert r.to_json_dict() == {"check": "x", "params": {"n": 1}, "pass": True}
    r2 = CheckResult("x", {"n": 1}, False, witness="bad")
    assert r2.to_json_dict()["witness"] == "bad"
