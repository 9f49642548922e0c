import random
from fractions import Fraction

import pytest

from orbimod.errors import (
    EnumerationLimitError,
    HypothesisError,
    IncompatibleIsotropyError,
    InconsistentDataError,
    InvalidBundleError,
)
from orbimod.models import (
    IsotropyVector,
    LineVBundle,
    OrbifoldSurface,
    StabilityClass,
    StabilityKind,
    SubBundleSpec,
    Verdict,
)
from orbimod.services import RankTwoService

from conftest import make_bundle, random_bundle, random_surface


def spec(m, *eps):
    return SubBundleSpec(m, IsotropyVector(eps))


def test_bundle_basics(genus_one_bundle, triangle_bundle):
    assert genus_one_bundle.n0 == 0
    assert genus_one_bundle.determinant_c1 == Fraction(1, 2)
    assert triangle_bundle.determinant_c1 == Fraction(83, 42)
    assert triangle_bundle.determinant.c1 == Fraction(83, 42)
    assert make_bundle(0, (2,), ((1, 1),), 0).n0 == 1


@pytest.mark.parametrize('pairs', [((1, 0),), ((0, 2),), ((-1, 1),)])
def test_bundle_rejects_bad_pairs(pairs):
    with pytest.raises(InvalidBundleError):
        make_bundle(0, (2,), pairs, 0)


def test_sub_bundle(genus_one_bundle):
    plus = RankTwoService.sub_bundle(genus_one_bundle, spec(0, 1))
    assert (plus.c1, plus.y) == (Fraction(1, 2), (1,))
    minus = RankTwoService.sub_bundle(genus_one_bundle, spec(0, -1))
    assert (minus.c1, minus.y) == (0, (0,))

    equal = make_bundle(0, (2,), ((1, 1),), 0)
    forced = RankTwoService.sub_bundle(equal, spec(0, 0))
    assert (forced.c1, forced.y) == (Fraction(1, 2), (1,))


def test_sub_bundle_requires_compatible_eps(genus_one_bundle):
    with pytest.raises(IncompatibleIsotropyError):
        RankTwoService.sub_bundle(genus_one_bundle, spec(0, 0))


def test_chi_twists(genus_one_bundle, quintic_bundle):
    assert RankTwoService.chi_twists(genus_one_bundle, spec(0, 1)) == (0, 1)
    assert RankTwoService.chi_twists(quintic_bundle, spec(1, -1, -1, -1, -1)) == (2, 0)


@pytest.mark.parametrize(('alphas', 'k', 'expected'), [
    ((2, 3, 7), 3, True),
    ((2, 2, 2), 3, False),
    ((2, 2, 5), 1, True),
])
def test_bounds_attainable_surface(alphas, k, expected):
    assert RankTwoService.bounds_attainable_surface(OrbifoldSurface(0, alphas), k) is expected


def test_bounds_attainable_bundle(quintic_bundle):
    assert RankTwoService.bounds_attainable_bundle(quintic_bundle) is True
    assert RankTwoService.bounds_attainable_bundle(make_bundle(0, (2, 2, 2), ((0, 1),) * 3, 0)) is False
    assert RankTwoService.bounds_attainable_bundle(make_bundle(0, (3,), ((1, 1),), 0)) is False


def test_semistable_h0(sextic_bundle):
    wall = spec(1, 1, -1, -1, -1, -1, -1)
    assert RankTwoService.on_wall(sextic_bundle, wall)
    h0 = RankTwoService.semistable_h0(sextic_bundle, wall)
    assert h0['h0_EKL'] == 2
    assert h0['h0_KLm2Lambda'] == 2
    assert h0['h0_KL2Lambda_dual'] == 2
    assert (h0['h0_end0_nontrivial_ext'], h0['h0_end0_trivial_ext']) == (3, 4)
    assert h0['h0_EKL'] == -h0['h0_KLm2Lambda'] + 3 * 0 - 2 + 6


def test_semistable_h0_off_wall(genus_one_bundle):
    with pytest.raises(HypothesisError):
        RankTwoService.semistable_h0(genus_one_bundle, spec(0, 1))


def test_stable_pair_classifier(triangle_bundle):
    verdict = RankTwoService.stable_pair_exists(triangle_bundle, StabilityClass(StabilityKind.STABLE))
    assert verdict.kind == Verdict.YES

    two_points = make_bundle(0, (3, 3), ((0, 1),) * 2, 0)
    verdict = RankTwoService.stable_pair_exists(two_points, StabilityClass('SemistableIndecomposable'))
    assert verdict.kind == Verdict.NO

    verdict = RankTwoService.stable_pair_exists(
        triangle_bundle, StabilityClass(StabilityKind.NON_SEMISTABLE_DECOMPOSABLE, h0_klm2=1)
    )
    assert verdict.kind == Verdict.YES
    assert 'isolated_point' in verdict.flags


def test_stable_pair_classifier_conditional(triangle_bundle):
    verdict = RankTwoService.stable_pair_exists(
        triangle_bundle, StabilityClass(StabilityKind.NON_SEMISTABLE_DECOMPOSABLE)
    )
    assert verdict.kind == Verdict.CONDITIONAL
    assert verdict.conditions


def test_stable_pair_classifier_rejects_inconsistent_h0(sextic_bundle):
    with pytest.raises(InconsistentDataError):
        RankTwoService.stable_pair_exists(
            sextic_bundle, StabilityClass(StabilityKind.SEMISTABLE_INDECOMPOSABLE, h0_klm2=1, h0_kl2=1)
        )
    with pytest.raises(InconsistentDataError):
        StabilityClass(StabilityKind.STABLE, h0_klm2=-1)


def test_all_higgs_invariant(quintic_bundle, genus_one_bundle):
    assert RankTwoService.all_higgs_invariant(quintic_bundle, spec(1, -1, -1, -1, -1)) is True
    assert RankTwoService.all_higgs_invariant(genus_one_bundle, spec(0, 1)) is False
    bounded = make_bundle(0, (2, 2, 2), ((0, 1),) * 3, 0)
    assert RankTwoService.all_higgs_invariant(bounded, spec(1, 1, 1, 1)) is False


def test_reducible_exists(genus_one_bundle, sextic_bundle, quintic_bundle):
    assert RankTwoService.reducible_exists(genus_one_bundle) is None
    assert RankTwoService.reducible_exists(make_bundle(1, (2,), ((0, 1),), 3)) is None
    assert RankTwoService.reducible_exists(quintic_bundle) is None

    witness = RankTwoService.reducible_exists(sextic_bundle)
    assert witness == spec(-1, -1, 1, 1, 1, 1, 1)
    line = RankTwoService.sub_bundle(sextic_bundle, witness)
    assert 2 * line.c1 == sextic_bundle.determinant_c1


def test_reducible_agrees_with_parity(sextic_bundle, quintic_bundle, triangle_bundle):
    for bundle in (sextic_bundle, quintic_bundle, triangle_bundle):
        by_search = RankTwoService.reducible_exists(bundle) is not None
        by_parity = RankTwoService.reducible_by_parity(bundle) is not None
        assert by_search == by_parity


def test_reduction_degree_pretest(genus_one_bundle, sextic_bundle):
    assert RankTwoService.reduction_degree_obstructed(genus_one_bundle)
    assert not RankTwoService.reduction_degree_obstructed(sextic_bundle)


def test_enumeration_cap(settings):
    class Tight(settings):
        ENUMERATION_CAP = 3

    bundle = make_bundle(0, (5,) * 4, ((0, 1),) * 4, 0)
    with pytest.raises(EnumerationLimitError):
        RankTwoService.reducible_exists(bundle, settings=Tight)


@pytest.mark.parametrize(('genus', 'k', 'dim'), [(0, 6, 6), (1, 1, 2), (0, 3, 0)])
def test_moduli_dimension(genus, k, dim):
    bundle = make_bundle(genus, (3,) * k, ((0, 1),) * k, 0)
    assert RankTwoService.moduli_dimension(bundle) == dim
    assert RankTwoService.real_moduli_dimension(bundle) == 2 * dim


def test_end0_chi_and_stable_bundles_possible():
    assert RankTwoService.end0_chi(make_bundle(2, (3,), ((0, 1),), 0)) == 4
    assert RankTwoService.stable_bundles_possible(make_bundle(0, (3, 3), ((0, 1),) * 2, 0)) is False
    assert RankTwoService.stable_bundles_possible(make_bundle(0, (3, 3, 3), ((0, 1),) * 3, 0)) is True


def test_hyperelliptic_equal_dimension(sextic_bundle, quintic_bundle):
    assert RankTwoService.hyperelliptic_equal_dimension(sextic_bundle)
    assert not RankTwoService.hyperelliptic_equal_dimension(quintic_bundle)


@pytest.mark.parametrize(('alphas', 'count'), [((2,) * 6, 32), ((2, 3, 7), 1), ((3, 5, 7), 1), ((2, 4), 2)])
def test_topological_roots(alphas, count):
    roots = RankTwoService.topological_roots(OrbifoldSurface(0, alphas))
    assert len(roots) == count
    for root in roots:
        assert root.c1 == 0
        assert root.power(2).is_trivial


def test_squarefree_normalize():
    mixed = OrbifoldSurface(0, (3, 4))
    assert RankTwoService.squarefree_normalize(LineVBundle(mixed, 5, (2, 3))) == LineVBundle(mixed, 0, (0, 1))

    odd = OrbifoldSurface(0, (3, 5))
    assert RankTwoService.squarefree_normalize(LineVBundle(odd, 4, (1, 2))) == LineVBundle(odd, 1, (0, 0))
    assert RankTwoService.squarefree_normalize(LineVBundle(odd, 3, (1, 2))).is_trivial


def test_squarefree_normalize_is_idempotent():
    surface = OrbifoldSurface(1, (2, 3, 4))
    det = LineVBundle(surface, 7, (1, 2, 3))
    once = RankTwoService.squarefree_normalize(det)
    assert RankTwoService.squarefree_normalize(once) == once


def test_reduce_to_n0_zero(genus_one_bundle):
    bundle = make_bundle(1, (2, 2), ((0, 1), (1, 1)), 0)
    reduction = RankTwoService.reduce_to_n0_zero(bundle)
    surface, reduced = reduction
    assert surface == OrbifoldSurface(1, (2,))
    assert reduced.pairs == ((0, 1),)
    assert (bundle.n0, reduced.n0) == (1, 0)
    assert reduced.l == bundle.l
    assert reduction.dropped == (1,)

    assert RankTwoService.reduce_to_n0_zero(genus_one_bundle).bundle == genus_one_bundle

    with pytest.raises(HypothesisError):
        RankTwoService.reduce_to_n0_zero(make_bundle(1, (2,), ((1, 1),), 0))


def test_parabolic_weights():
    bundle = make_bundle(0, (2, 3, 5), ((0, 1), (1, 1), (1, 4)), 0)
    assert RankTwoService.parabolic_weights(bundle) == [
        (Fraction(0), Fraction(1, 2), False),
        (Fraction(1, 3), Fraction(1, 3), True),
        (Fraction(1, 5), Fraction(4, 5), False),
    ]


def test_twist_by_root():
    bundle = make_bundle(0, (2, 4, 3), ((0, 1), (1, 2), (0, 2)), 1)
    roots = RankTwoService.topological_roots(bundle.surface)
    twisted = RankTwoService.twist_by_root(bundle, roots[-1])
    assert twisted.pairs == ((0, 1), (0, 3), (0, 2))
    assert twisted.n0 == bundle.n0
    assert twisted.determinant_c1 == bundle.determinant_c1
    assert RankTwoService.moduli_dimension(twisted) == RankTwoService.moduli_dimension(bundle)


def test_twist_by_root_rejects_non_root(genus_one_bundle):
    with pytest.raises(HypothesisError):
        RankTwoService.twist_by_root(genus_one_bundle, LineVBundle(genus_one_bundle.surface, 0, (1,)))


@pytest.mark.parametrize('seed', range(5))
def test_chi_twists_sum(seed):
    rng = random.Random(seed)
    for _ in range(10):
        bundle = random_bundle(rng, random_surface(rng))
        for eps in IsotropyVector.all_for(bundle):
            first, second = RankTwoService.chi_twists(bundle, SubBundleSpec(rng.randint(-3, 3), eps))
            assert first + second == 2 * bundle.genus - 2 + bundle.n_free


@pytest.mark.parametrize('seed', range(5))
def test_reduce_to_n0_zero_preserves_moduli_dimension(seed):
    rng = random.Random(seed)
    for _ in range(20):
        bundle = random_bundle(rng, random_surface(rng, max_points=6))
        reduced = RankTwoService.reduce_to_n0_zero(bundle).bundle
        assert reduced.n0 == 0
        assert RankTwoService.moduli_dimension(reduced) == RankTwoService.moduli_dimension(bundle)
