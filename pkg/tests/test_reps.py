import random
from fractions import Fraction

import pytest

from orbimod.errors import EnumerationLimitError, HypothesisError, IncompatibleIsotropyError
from orbimod.models import IsotropyVector, LineVBundle, OrbifoldSurface, RealComponent, RotationData
from orbimod.services import RepsService

from conftest import make_bundle, random_line, random_surface


def test_fuchsian_presentation_triangle():
    presentation = RepsService.fuchsian_presentation(OrbifoldSurface(0, (2, 3, 7)))
    assert presentation.to_dict() == {
        'generators': ['q1', 'q2', 'q3'],
        'relations': [
            [['q1', 2]],
            [['q2', 3]],
            [['q3', 7]],
            [['q1', 1], ['q2', 1], ['q3', 1]],
        ],
    }


def test_fuchsian_presentation_genus_one():
    presentation = RepsService.fuchsian_presentation(OrbifoldSurface(1, (2,)))
    assert presentation.generators == ('a1', 'b1', 'q1')
    assert presentation.relations == (
        (('q1', 2),),
        (('q1', 1), ('a1', 1), ('b1', 1), ('a1', -1), ('b1', -1)),
    )


def test_circle_group_presentation():
    surface = OrbifoldSurface(1, (2,))
    presentation = RepsService.circle_group_presentation(LineVBundle(surface, 0, (1,)))
    assert presentation.generators[-1] == 'h'
    assert (('q1', 2), ('h', 1)) in presentation.relations
    assert (('q1', 1), ('a1', 1), ('b1', 1), ('a1', -1), ('b1', -1)) in presentation.relations

    trivial = RepsService.circle_group_presentation(LineVBundle.trivial(surface))
    assert (('q1', 2),) in trivial.relations


def test_circle_group_presentation_substitution():
    surface = OrbifoldSurface(0, (2, 3))
    relations = RepsService.circle_group_presentation(LineVBundle(surface, 2, (1, 0))).relations
    assert (('q1', 2), ('h', 1)) in relations
    assert (('q2', 3),) in relations
    assert (('q1', 1), ('q2', 1), ('h', -2)) in relations
    assert (('q1', 1), ('h', 1), ('q1', -1), ('h', -1)) in relations


def test_z2_presentation_and_parities():
    surface = OrbifoldSurface(0, (2, 3, 4))
    det = LineVBundle(surface, 1, (1, 0, 3))
    presentation = RepsService.circle_group_presentation(det, z2=True)
    assert presentation.relations[-1] == (('h', 2),)
    assert RepsService.relation_parities(presentation) == {'q1': (2, 1), 'q2': (3, 0), 'q3': (4, 3)}
    assert RepsService.rotation_parity_consistent(presentation, RotationData((1, 2, 3), surface.cone_orders))
    assert not RepsService.rotation_parity_consistent(presentation, RotationData((0, 2, 3), surface.cone_orders))


@pytest.mark.parametrize(('alpha', 'y', 'expected'), [
    (2, 1, [(1,)]),
    (3, 0, [(0,), (2,)]),
    (4, 1, [(1,), (3,)]),
])
def test_compatible_rotation_numbers(alpha, y, expected):
    det = LineVBundle(OrbifoldSurface(1, (alpha,)), 0, (y,))
    assert [rd.r for rd in RepsService.compatible_rotation_numbers(det)] == expected


@pytest.mark.parametrize(('genus', 'alphas', 'y', 'r', 'dim'), [
    (1, (2,), (1,), (1,), 2),
    (2, (3,), (0,), (0,), 6),
    (0, (2,) * 6, (1,) * 6, (1,) * 6, 6),
])
def test_rep_variety_dimension(genus, alphas, y, r, dim):
    det = LineVBundle(OrbifoldSurface(genus, alphas), 0, y)
    assert RepsService.rep_variety_dimension(det, RotationData(r, alphas)) == dim


def test_rep_variety_dimension_rejects_parity_mismatch():
    det = LineVBundle(OrbifoldSurface(1, (3,)), 0, (1,))
    with pytest.raises(IncompatibleIsotropyError):
        RepsService.rep_variety_dimension(det, RotationData((2,), (3,)))


def test_rep_reducible():
    surface = OrbifoldSurface(1, (2,))
    for b in (-1, 0, 1, 2):
        assert RepsService.rep_reducible(LineVBundle(surface, b, (1,)), RotationData((1,), (2,))) is None

    pair = OrbifoldSurface(0, (2, 2))
    witness = RepsService.rep_reducible(LineVBundle(pair, 0, (1, 1)), RotationData((1, 1), (2, 2)))
    assert witness == IsotropyVector((-1, 1))

    single = OrbifoldSurface(1, (3,))
    assert RepsService.rep_reducible(LineVBundle(single, 1, (0,)), RotationData((0,), (3,))) is None


def test_rep_reducible_respects_cap(settings):
    class Tight(settings):
        ENUMERATION_CAP = 2

    surface = OrbifoldSurface(0, (3, 3, 3))
    det = LineVBundle(surface, 0, (1, 1, 1))
    with pytest.raises(EnumerationLimitError):
        RepsService.rep_reducible(det, RotationData((1, 1, 1), (3, 3, 3)), settings=Tight)


def test_sign_twist_orbit():
    one = LineVBundle(OrbifoldSurface(0, (2,)), 0, (1,))
    assert [rd.r for rd in RepsService.sign_twist_orbit(one, RotationData((1,), (2,)))] == [(1,)]

    mixed = LineVBundle(OrbifoldSurface(0, (2, 4)), 0, (1, 1))
    assert [rd.r for rd in RepsService.sign_twist_orbit(mixed, RotationData((1, 1), (2, 4)))] == [(1, 1), (1, 3)]

    odd = LineVBundle(OrbifoldSurface(0, (3, 5)), 0, (1, 0))
    assert [rd.r for rd in RepsService.sign_twist_orbit(odd, RotationData((1, 2), (3, 5)))] == [(1, 2)]


def test_rotation_data_for_bundle(genus_one_bundle):
    det, rotation = RepsService.rotation_data_for_bundle(genus_one_bundle)
    assert det == genus_one_bundle.determinant
    assert rotation.r == (1,)

    bundle = make_bundle(0, (5, 5, 5), ((1, 3), (2, 4), (2, 2)), 0)
    _, rotation = RepsService.rotation_data_for_bundle(bundle)
    assert rotation.r == (2, 3, 0)
    assert rotation.n0 == 1


def test_real_fixed_components(genus_one_bundle, quintic_bundle):
    components = RepsService.real_fixed_components(genus_one_bundle)
    assert len(components) == 2
    stable, fibred = components
    assert stable.kind == RealComponent.STABLE_BUNDLES
    assert stable.nonempty and stable.complex_dim == 1
    assert (fibred.rank, fibred.base_sym_power, fibred.cover_order, fibred.complex_dim) == (1, 0, 4, 1)

    components = RepsService.real_fixed_components(quintic_bundle)
    assert len(components) == 6
    assert components[0].nonempty is False


def test_psl2r_component():
    surface = OrbifoldSurface(2, (2,))
    top = RepsService.psl2r_component(surface, 2, (1,))
    assert (top.rank, top.base_sym_power, top.complex_dim) == (4, 0, 4)
    assert top.euler_class == Fraction(5, 2)

    lower = RepsService.psl2r_component(surface, 1, (1,))
    assert (lower.rank, lower.base_sym_power, lower.complex_dim) == (3, 1, 4)

    with pytest.raises(HypothesisError):
        RepsService.psl2r_component(OrbifoldSurface(1, (2,)), 1, (1,))
    with pytest.raises(HypothesisError):
        RepsService.psl2r_component(surface, -1, (0,))


def test_teichmuller_component():
    component = RepsService.teichmuller_component(OrbifoldSurface(2, (2,)))
    assert component.euler_class == Fraction(5, 2)
    assert RepsService.milnor_wood(OrbifoldSurface(2, (2,)), component.euler_class)

    triangle = OrbifoldSurface(0, (2, 3, 7))
    assert RepsService.teichmuller_component(triangle).euler_class == Fraction(1, 42)

    with pytest.raises(HypothesisError):
        RepsService.teichmuller_component(OrbifoldSurface(0, (2, 2, 2, 2)))


def test_euler_class():
    assert RepsService.euler_class(OrbifoldSurface(0, (2, 3)), 1, (1, 2)) == Fraction(13, 6)


@pytest.mark.parametrize(('e', 'holds'), [(Fraction(5, 2), True), (Fraction(3), False), (Fraction(0), True),
                                          (Fraction(-5, 2), True)])
def test_milnor_wood(e, holds):
    assert RepsService.milnor_wood(OrbifoldSurface(2, (2,)), e) is holds


@pytest.mark.parametrize(('genus', 'alphas', 'dim'), [(0, (2, 3, 7), 0), (2, (2,), 4), (1, (2,), 1)])
def test_teichmuller_dimension(genus, alphas, dim):
    assert RepsService.teichmuller_dimension(OrbifoldSurface(genus, alphas)) == dim


def test_conical_metric_report():
    report = RepsService.conical_metric_report(OrbifoldSurface(0, (2, 3, 7)))
    assert report['exists_unique'] is True
    assert report['cone_angles_over_pi'] == [Fraction(1), Fraction(2, 3), Fraction(2, 7)]
    assert RepsService.conical_metric_report(OrbifoldSurface(0, (2, 2, 2, 2)))['exists_unique'] is False
    assert RepsService.conical_metric_report(OrbifoldSurface(1, (2, 2, 2, 2)))['exists_unique'] is True
    assert RepsService.conical_metric_report(OrbifoldSurface(2, (2,)))['cone_angles_over_pi'] == [Fraction(1)]


def test_real_lift_count():
    assert RepsService.real_lift_count(OrbifoldSurface(0, (2, 3, 7))) == 1
    assert RepsService.real_lift_count(OrbifoldSurface(1, (3,))) == 4
    assert RepsService.real_lift_count(OrbifoldSurface(0, (2,) * 6)) == 32


@pytest.mark.parametrize('b', range(0, 5))
def test_psl2r_dimension_constant_in_b(b):
    surface = OrbifoldSurface(3, (3, 5))
    component = RepsService.psl2r_component(surface, b, (1, 2))
    assert component.rank == 2 + b + 2
    assert component.base_sym_power == 4 - b
    assert component.rank + component.base_sym_power == component.complex_dim == 8


@pytest.mark.parametrize('seed', range(5))
def test_sign_twist_orbit_preserves_n0_and_parity(seed):
    rng = random.Random(seed)
    for _ in range(10):
        det = random_line(rng, random_surface(rng, max_points=4, max_alpha=6))
        rotations = RepsService.compatible_rotation_numbers(det)
        rotation = rng.choice(rotations)
        orbit = RepsService.sign_twist_orbit(det, rotation)
        assert rotation in orbit
        for twisted in orbit:
            assert twisted.n0 == rotation.n0
            assert all((r - y) % 2 == 0 for r, y in zip(twisted.r, det.y))


@pytest.mark.parametrize('seed', range(5))
def test_relation_parity_read_back(seed):
    rng = random.Random(seed)
    for _ in range(10):
        surface = random_surface(rng, max_points=4, max_alpha=6)
        det = random_line(rng, surface)
        presentation = RepsService.circle_group_presentation(det, z2=True)
        parities = RepsService.relation_parities(presentation)
        assert parities == {f"q{i}": (alpha, y) for i, (alpha, y) in enumerate(zip(surface.cone_orders, det.y), 1)}
        rotation = rng.choice(RepsService.compatible_rotation_numbers(det))
        assert RepsService.rotation_parity_consistent(presentation, rotation)
        shifted = RotationData((det.y[0] + 1,) + rotation.r[1:], surface.cone_orders)
        assert not RepsService.rotation_parity_consistent(presentation, shifted)
