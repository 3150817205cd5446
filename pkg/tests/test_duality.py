import pytest

from gsi.constructors import random_good
from gsi.duality import (
    bidual,
    canonical_ideal,
    cd_difference,
    fiber_dual,
    is_canonical,
    is_gorenstein,
)
from gsi.ideal import equals, frobenius, is_subset, translate
from gsi.lattice import box_points, ones, vadd, vsub
from gsi.oracle import brute_canonical, brute_dual


def test_cd_identity(n1, n2, ex2):
    assert equals(cd_difference(n2, n2), n2)
    assert equals(cd_difference(n1, n1), n1)
    assert equals(cd_difference(ex2, ex2), ex2)


def test_cd_of_canonical(n1):
    k1 = canonical_ideal(n1)
    assert equals(cd_difference(k1, n1), k1)


def test_cd_against_oracle(n1, n2, ex2, node2):
    for EJ, EI in ((n1, n1), (n2, n2), (ex2, ex2), (node2, node2),
                   (canonical_ideal(ex2), ex2)):
        D = cd_difference(EJ, EI)
        bd = brute_dual(EJ, EI)
        e = ones(EJ.r)
        lo = vsub(vsub(EJ.m, EI.c), e)
        hi = vadd(vsub(EJ.c, EI.m), vadd(e, e))
        for p in box_points(lo, hi):
            assert D.contains(p) == (p in bd)


def test_cd_eq1_sum_rule(ex2, n1):
    for EJ, EI in ((ex2, ex2), (canonical_ideal(ex2), ex2), (n1, n1)):
        D = cd_difference(EJ, EI)
        e = ones(EJ.r)
        for beta in box_points(D.m, vadd(D.c, e)):
            if not D.contains(beta):
                continue
            for alpha in box_points(EI.m, vadd(EI.c, e)):
                if EI.contains(alpha):
                    assert EJ.contains(vadd(beta, alpha))


def test_translate_covariance(ex2):
    delta = (2, -1)
    lhs = cd_difference(translate(ex2, delta), ex2)
    rhs = translate(cd_difference(ex2, ex2), delta)
    assert equals(lhs, rhs)


def test_fiber_dual_examples(n1, n2, ex2):
    fd = fiber_dual(n2, n2)
    assert fd.promoted is not None and equals(fd.promoted, n2)
    fd1 = fiber_dual(n1, n1)
    assert fd1.promoted is not None
    assert equals(fd1.promoted, canonical_ideal(n1))
    fdx = fiber_dual(ex2, ex2)
    assert (4, 4) in fdx.points and not ex2.contains((4, 4))


def test_fiber_dual_region_contract(ex2):
    fd = fiber_dual(ex2, ex2)
    for p in fd.points:
        assert p in fd.box


def test_canonical_examples(n1, n2, node2, node3):
    k1 = canonical_ideal(n1)
    assert sorted(k1.small) == [(0,), (1,), (3,)] and k1.c == (3,)
    assert equals(canonical_ideal(n2), n2)
    assert equals(canonical_ideal(node2), node2)
    # the transversal-lines semigroup stops being symmetric at r = 3: the
    # canonical ideal picks up the coordinate axes
    k3 = canonical_ideal(node3)
    assert k3.contains((1, 0, 0)) and not node3.contains((1, 0, 0))
    assert sorted(k3.small) == [
        (0, 0, 0), (0, 0, 1), (0, 1, 0), (1, 0, 0), (1, 1, 1)]


def test_canonical_postconditions(n1, n2, node2, node3, ex2, prod22):
    for S in (n1, n2, node2, node3, ex2, prod22):
        K = canonical_ideal(S)
        assert frobenius(K) == frobenius(S)
        assert is_subset(S, K)


def test_canonical_against_oracle(n1, n2, node2, ex2):
    for S in (n1, n2, node2, ex2):
        K = canonical_ideal(S)
        bc = brute_canonical(S)
        e = ones(S.r)
        span = vsub(S.c, S.m)
        lo = vsub(vsub(S.m, vadd(span, span)), vadd(e, e))
        hi = vadd(vadd(S.c, span), e)
        for p in box_points(lo, hi):
            assert K.contains(p) == (p in bc)


def test_canonical_requires_semigroup(ex2):
    with pytest.raises(ValueError):
        canonical_ideal(translate(ex2, (1, 1)))


def test_is_canonical_examples(n1, ex2):
    kx = canonical_ideal(ex2)
    assert is_canonical(kx, ex2)
    assert not is_canonical(ex2, ex2)
    assert is_canonical(translate(canonical_ideal(n1), (7,)), n1)


def test_is_gorenstein_examples(n1, n2, node2, node3, ex2):
    assert is_gorenstein(n2)
    assert not is_gorenstein(n1)
    assert is_gorenstein(node2)
    assert not is_gorenstein(node3)
    assert not is_gorenstein(ex2)


def test_gorenstein_witness(ex2):
    kx = canonical_ideal(ex2)
    assert kx.contains((4, 4)) and not ex2.contains((4, 4))


def test_bidual(n1, n2, ex2):
    k1 = canonical_ideal(n1)
    assert equals(bidual(k1, n1), n1)
    assert equals(bidual(n2, n2), n2)
    assert is_subset(ex2, bidual(ex2, ex2))


def test_bidual_contains_everywhere(ex2, node2):
    for S in (ex2, node2):
        for seed in range(5):
            EI = random_good(S, seed)
            for EJ in (S, canonical_ideal(S)):
                assert is_subset(EI, bidual(EJ, EI))


def test_promotion_rejects_non_good_regions():
    from gsi.duality import _promote_region

    # not meet-closed: (0,1) and (1,0) without (0,0)
    rep, why = _promote_region(2, {(0, 1), (1, 0), (1, 1), (2, 2)},
                               (0, 0), (2, 2), (1, 1))
    assert rep is None and "minimum" in why
    # fine region: the node shape
    rep, why = _promote_region(2, {(0, 0), (1, 1), (1, 2), (2, 1), (2, 2)},
                               (0, 0), (2, 2), (1, 1))
    assert why is None and rep is not None and rep.c == (1, 1)


def test_lemma_fibra_inclusion(ex2, n1, node2):
    for S in (ex2, n1, node2):
        K = canonical_ideal(S)
        for EJ in (S, K):
            for EI in (S, K, random_good(S, 11)):
                D = cd_difference(EJ, EI)
                fd = fiber_dual(EJ, EI)
                for p in fd.box:
                    if D.contains(p):
                        assert p in fd.points
