"""RTT identities, the rational R-matrix, and the symbolic coproduct/antipode layer."""

from __future__ import annotations

import pytest

import ybtwist as yb
from ybtwist.matrices import ExactMatrix
from ybtwist.ncpoly import NCPoly, gen, tensor2
from ybtwist.rational import BivarPoly, Rational
from ybtwist.yangian import (
    RationalMatrix,
    adjudicate_twisted_coproduct,
    antipode_series,
    check_augmented_relations,
    check_defining_relations,
    check_displayed_exchange_relations,
    check_rtt,
    check_twisted_rtt,
    coassociativity_report,
    coproduct_table,
    twisted_l,
    twisted_r_lambda,
    unitarity_report,
    yangian_r,
)


def test_yang_r_at_unit_spacing():
    # with lambda1 - lambda2 = 1 the 4x4 matrix is 1 + P
    r = yangian_r(2).evaluate(2, 1)
    expected = ExactMatrix(4, {(0, 0): 2, (1, 1): 1, (1, 2): 1,
                               (2, 1): 1, (2, 2): 1, (3, 3): 2})
    assert r == expected


def test_yang_r_constant_term_is_identity():
    n = 3
    u = Rational(BivarPoly.var(0) - BivarPoly.var(1))
    p = RationalMatrix(9, {(a * n + b, b * n + a): Rational.const(1)
                           for a in range(n) for b in range(n)})
    assert yangian_r(n) == RationalMatrix.identity(9) + p.scale(Rational.const(1) / u)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_unitarity(n):
    assert unitarity_report(n).ok


@pytest.mark.parametrize("n", [2, 3])
def test_defining_relations_zero_violations(n):
    report = check_defining_relations(n, 3, 3)
    assert report.ok
    assert report.checks[0].detail["violations"] == 0


def test_defining_relations_corrupted_rep():
    report = check_defining_relations(2, 2, 2, transpose=True)
    assert not report.ok
    assert report.checks[0].detail["violations"] > 0
    assert report.checks[0].witness is not None


def test_displayed_exchange_relations():
    assert check_displayed_exchange_relations(2).ok
    assert check_displayed_exchange_relations(3).ok


@pytest.mark.parametrize("n", [1, 2, 3])
def test_rtt_exact(n):
    assert check_rtt(n).ok


def test_rtt_negative_control():
    report = check_rtt(2, corrupt_shift=2)
    assert not report.ok
    assert report.checks[0].witness is not None


def test_augmented_relations(trivial2_ctx, z4_radical_ctx):
    assert check_augmented_relations(trivial2_ctx).ok
    assert check_augmented_relations(z4_radical_ctx).ok


def test_augmented_relations_corrupted_sigma(z4_radical):
    # For bijective sigma the w-L exchange is representation-theoretic
    # bookkeeping, so the corruption has to break bijectivity to be visible.
    ctx = yb.algebra_from_brace(z4_radical)
    bad = [list(row) for row in ctx.sigma]
    bad[1] = [0, 1, 2, 1]
    ctx.sigma = tuple(tuple(r) for r in bad)
    report = check_augmented_relations(ctx)
    assert not report.check("w_exchange").passed
    assert report.check("w_exchange").witness is not None


def test_twisted_r_is_conjugated_r(trivial2_ctx, z4_radical_ctx):
    for ctx in (trivial2_ctx, z4_radical_ctx):
        report = check_twisted_rtt(ctx)
        assert report.check("conjugation_form").passed
        assert report.check("twisted_rtt").passed


def test_twisted_r_trivial_reduces_to_untwisted(trivial2_ctx):
    assert twisted_r_lambda(trivial2_ctx) == yangian_r(2)
    # L^F = L when the twist is the identity
    n = trivial2_ctx.n
    pole = Rational(BivarPoly.var(0) - BivarPoly.const(1))
    from ybtwist.yangian import _perm_rational

    l_plain = RationalMatrix.identity(n * n) + _perm_rational(n, 2, (0, 1)).scale(
        Rational.const(1) / pole
    )
    assert twisted_l(trivial2_ctx) == l_plain


def test_twisted_rtt_all_braces_up_to_3(braces_up_to_4):
    for n in (1, 2, 3):
        for b in braces_up_to_4[n]:
            assert check_twisted_rtt(yb.algebra_from_brace(b)).ok


# ------------------------------------------------------------ symbolic layer


def test_coproduct_displays():
    n = 2
    table = coproduct_table(n, 3)
    one = NCPoly.one()
    for a in range(n):
        for b in range(n):
            l1 = gen(1, a, b)
            expected1 = tensor2(l1, one) + tensor2(one, l1)
            assert table[(1, a, b)] == expected1
            l2 = gen(2, a, b)
            expected2 = tensor2(l2, one) + tensor2(one, l2)
            for c in range(n):
                expected2 = expected2 + tensor2(gen(1, c, b), gen(1, a, c))
            assert table[(2, a, b)] == expected2
            l3 = gen(3, a, b)
            expected3 = tensor2(l3, one) + tensor2(one, l3)
            for c in range(n):
                expected3 = expected3 + tensor2(gen(1, c, b), gen(2, a, c))
                expected3 = expected3 + tensor2(gen(2, c, b), gen(1, a, c))
            assert table[(3, a, b)] == expected3


def test_coassociativity_symbolic():
    assert coassociativity_report(2, 3).ok
    assert coassociativity_report(3, 2).ok


def test_antipode_displays():
    n = 2
    table, report = antipode_series(n, 3)
    assert report.ok
    for a in range(n):
        for b in range(n):
            assert table[(1, a, b)] == -gen(1, a, b)
            expected2 = -gen(2, a, b)
            for c in range(n):
                expected2 = expected2 + gen(1, c, b) * gen(1, a, c)
            assert table[(2, a, b)] == expected2
            expected3 = -gen(3, a, b)
            for c in range(n):
                expected3 = expected3 + gen(1, c, b) * gen(2, a, c)
                expected3 = expected3 + gen(2, c, b) * gen(1, a, c)
                for d in range(n):
                    expected3 = expected3 - gen(1, d, b) * gen(1, c, d) * gen(1, a, c)
            assert table[(3, a, b)] == expected3


def test_antipode_identities_vanish_at_level_4():
    _, report = antipode_series(2, 4)
    assert report.ok
    assert report.check("left_identity_level4").passed
    assert report.check("right_identity_level4").passed


def test_counit_of_generators():
    from ybtwist.ncpoly import counit

    assert counit(gen(1, 0, 1)) == 0
    assert counit(NCPoly.one()) == 1
    # (eps x id) Delta(L) = L, symbolically
    n = 2
    for a in range(n):
        for b in range(n):
            d = coproduct_table(n, 2)[(2, a, b)]
            picked = NCPoly.zero()
            for (w1, w2), c in d.terms.items():
                if w1 == ():
                    picked = picked + NCPoly({w2: c})
            assert picked == gen(2, a, b)


# ------------------------------------------------- adjudication (open range)


def test_adjudication_is_definitive_on_z4_radical(z4_radical_ctx):
    report = adjudicate_twisted_coproduct(z4_radical_ctx, 2)
    assert report.ok
    detail = report.check("adjudication").detail
    assert detail["display_1m_vs_conjugated_truncated"] is True
    assert detail["display_1m_vs_conjugated_standard"] is False
    assert detail["display_0m_vs_conjugated_standard"] is False
    assert detail["display_0m_vs_conjugated_truncated"] is False
    assert "k=1..m" in detail["conclusion"]


def test_adjudication_trivial_brace(trivial2_ctx):
    report = adjudicate_twisted_coproduct(trivial2_ctx, 2)
    assert report.ok
    detail = report.check("adjudication").detail
    # even with the identity twist the two display ranges differ, and only the
    # truncated-range pairing matches
    assert detail["display_1m_vs_conjugated_truncated"] is True
    assert detail["display_0m_vs_conjugated_standard"] is False


def test_adjudication_degenerate_order_one():
    # at order 1 the single idempotent is the identity, so the k=0 display term
    # coincides with the conjugated k=0 coproduct term and both pairings match
    b1 = yb.trivial_brace(1)
    report = adjudicate_twisted_coproduct(yb.algebra_from_brace(b1), 2)
    detail = report.check("adjudication").detail
    assert detail["display_0m_vs_conjugated_standard"] is True
    assert detail["display_1m_vs_conjugated_truncated"] is True
