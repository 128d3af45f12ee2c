import pytest

import factorbench as fb
from factorbench.errors import SizeLimit
from factorbench.power import (
    atomicity_criterion,
    build_reduced_power_monoid,
    kappa_report,
)


def test_build_c2():
    build = build_reduced_power_monoid(fb.cyclic(2))
    assert build.result.size == 2
    assert build.result.names == ("{1}", "{1,g}")
    assert build.subset_of == (frozenset({0}), frozenset({0, 1}))


def test_build_c3_setwise_products():
    build = build_reduced_power_monoid(fb.cyclic(3))
    P = build.result
    assert P.size == 4
    b = P.names.index("{1,g}")
    full = P.names.index("{1,g,g^2}")
    assert P.mul(b, b) == full
    # setwise product recomputed from the base by hand
    K = build.base
    pairwise = {K.mul(x, y) for x in build.subset_of[b] for y in build.subset_of[b]}
    assert pairwise == build.subset_of[P.mul(b, b)]


def test_build_c5_size():
    assert build_reduced_power_monoid(fb.cyclic(5)).result.size == 16


def test_every_subset_contains_identity():
    for m in range(2, 6):
        build = build_reduced_power_monoid(fb.cyclic(m))
        assert all(0 in s for s in build.subset_of)


def test_power_monoids_are_reduced():
    for m in range(2, 6):
        P = build_reduced_power_monoid(fb.cyclic(m)).result
        assert sorted(P.units) == [0]


def test_size_cap():
    with pytest.raises(SizeLimit):
        build_reduced_power_monoid(fb.gl(2, 3))  # 48 elements


def test_atomicity_criterion_cyclic():
    assert atomicity_criterion(fb.cyclic(2)) is False
    assert atomicity_criterion(fb.cyclic(3)) is True
    assert atomicity_criterion(fb.cyclic(4)) is False
    assert atomicity_criterion(fb.cyclic(5)) is True


def test_atomicity_criterion_cross_checks_on_small_bases(sample_corpus):
    for name, K in sample_corpus:
        if K.size > 6:
            continue
        atomicity_criterion(K)  # raises CrossCheckMismatch on disagreement


def test_kappa_reports():
    rep = kappa_report(fb.cyclic(3))
    assert (rep.kappa, rep.bound, rep.attains_bound, rep.atomic) == (2, 2, True, True)
    rep = kappa_report(fb.cyclic(5))
    assert (rep.kappa, rep.bound, rep.attains_bound) == (4, 4, True)
    rep = kappa_report(fb.cyclic(2))
    assert rep.kappa <= 1 and not rep.atomic


def test_kappa_bound_across_small_bases(sample_corpus):
    for name, K in sample_corpus:
        if K.size > 5:
            continue
        rep = kappa_report(K)  # raises BoundViolation if the bound breaks
        assert rep.kappa <= K.size - 1, name


def test_atoms_of_power_c3(pow_c3):
    assert [pow_c3.names[a] for a in pow_c3.atoms] == ["{1,g}", "{1,g^2}"]
    assert fb.order_and_idempotents(pow_c3).idempotents == (
        0,
        pow_c3.names.index("{1,g,g^2}"),
    )


def test_units_of_power_c3(pow_c3):
    assert [pow_c3.names[u] for u in sorted(pow_c3.units)] == ["{1}"]
