"""
Report Service Layer
Assemble the per-command report dictionaries from the domain services
"""

import logging
from typing import Dict, Mapping, Optional

from orbimod.errors import HypothesisError
from orbimod.models import LineVBundle, RankTwoVBundle, StabilityClass, SubBundleSpec
from orbimod.services.core_service import CoreService
from orbimod.services.morse_service import PERFECT_MORSE, MorseService
from orbimod.services.ranktwo_service import RankTwoService
from orbimod.services.reps_service import RepsService
from orbimod.services.spectral_service import SpectralService
from orbimod.utils.helpers import format_rational

logger = logging.getLogger(__name__)


class ReportService:
    """Service class building the JSON-ready report of each command"""

    @staticmethod
    def surface_report(payload: Mapping, settings=None) -> Dict:
        surface = payload['surface']
        metric = RepsService.conical_metric_report(surface)
        return {
            'surface': surface.to_dict(),
            'euler_characteristic': format_rational(surface.euler_characteristic),
            'hyperbolic': surface.hyperbolic,
            'degree_quantum': surface.degree_quantum,
            'canonical_bundle': CoreService.canonical_bundle(surface).to_dict(),
            'teichmuller_dimension': RepsService.teichmuller_dimension(surface) if surface.hyperbolic else None,
            'conical_metric': {
                'exists_unique': metric['exists_unique'],
                'cone_angles_over_pi': [format_rational(angle) for angle in metric['cone_angles_over_pi']],
            },
            'presentation': RepsService.fuchsian_presentation(surface).to_dict(),
            'topological_roots': [root.to_dict() for root in RankTwoService.topological_roots(surface)],
            'real_lift_count': RepsService.real_lift_count(surface),
        }

    @staticmethod
    def bundle_report(payload: Mapping, settings=None) -> Dict:
        bundle: RankTwoVBundle = payload['bundle']
        det = bundle.determinant
        witness = RankTwoService.reducible_exists(bundle, settings=settings)
        try:
            reduction = RankTwoService.reduce_to_n0_zero(bundle).to_dict()
        except HypothesisError:
            reduction = None
        _, rotation = RepsService.rotation_data_for_bundle(bundle)
        report = {
            'bundle': bundle.to_dict(),
            'n0': bundle.n0,
            'determinant': det.to_dict(),
            'determinant_squarefree': RankTwoService.squarefree_normalize(det).to_dict(),
            'moduli_dimension': RankTwoService.moduli_dimension(bundle),
            'real_dimension': RankTwoService.real_moduli_dimension(bundle),
            'parabolic_weights': [
                {'lambda': format_rational(low), 'lambda_prime': format_rational(high), 'degenerate': degenerate}
                for low, high, degenerate in RankTwoService.parabolic_weights(bundle)
            ],
            'reduction': reduction,
            'reducible': witness.to_dict() if witness is not None else None,
            'bounds_attainable': RankTwoService.bounds_attainable_bundle(bundle, settings=settings),
            'stable_bundles_possible': RankTwoService.stable_bundles_possible(bundle),
            'end0_chi': RankTwoService.end0_chi(bundle),
            'hyperelliptic_equal_dimension': RankTwoService.hyperelliptic_equal_dimension(bundle),
            'rotation_numbers': rotation.to_dict(),
        }
        if payload.get('stability') is not None:
            report['stability'] = ReportService._stability(bundle, payload['stability'])
        if payload.get('sub') is not None:
            report['sub'] = ReportService._sub(bundle, payload['sub'])
        if payload.get('line_bundle') is not None:
            report['line_bundle'] = ReportService._line(payload['line_bundle'])
        return report

    @staticmethod
    def _stability(bundle: RankTwoVBundle, stability: StabilityClass) -> Dict:
        verdict = RankTwoService.stable_pair_exists(bundle, stability)
        return {'input': stability.to_dict(), **verdict.to_dict()}

    @staticmethod
    def _sub(bundle: RankTwoVBundle, spec: SubBundleSpec) -> Dict:
        line = RankTwoService.sub_bundle(bundle, spec)
        on_wall = RankTwoService.on_wall(bundle, spec)
        return {
            **spec.to_dict(),
            'degree': format_rational(line.c1),
            'isotropy': list(line.y),
            'chi_twists': list(RankTwoService.chi_twists(bundle, spec)),
            'on_wall': on_wall,
            'all_higgs_invariant': RankTwoService.all_higgs_invariant(bundle, spec),
            'semistable_h0': RankTwoService.semistable_h0(bundle, spec) if on_wall else None,
        }

    @staticmethod
    def _line(line: LineVBundle) -> Dict:
        return {
            **line.to_dict(),
            'chi': CoreService.chi_line(line),
            'h0_forced': CoreService.h0_forced(line).to_dict(),
            'smooth_degree': CoreService.smooth_line_bundle(line),
            'serre_partner': CoreService.serre_partner(line).to_dict(),
        }

    @staticmethod
    def strata_report(payload: Mapping, settings=None) -> Dict:
        bundle = payload['bundle']
        strata = MorseService.enumerate_strata(bundle, settings=settings)
        return {
            'strata': [stratum.to_dict() for stratum in strata],
            'minimum': MorseService.minimum_stratum(bundle, settings=settings).to_dict(),
            'poincare': MorseService.poincare_polynomial(bundle, settings=settings).to_dict(),
            'assumptions': [PERFECT_MORSE],
            'topology': MorseService.topology_report(bundle, settings=settings),
        }

    @staticmethod
    def poincare_report(payload: Mapping, settings=None) -> Dict:
        bundle = payload['bundle']
        poly = MorseService.poincare_polynomial(
            bundle, payload.get('min_poly'), payload.get('cover_polys'), settings=settings
        )
        return {
            'poincare': poly.to_dict(),
            'total_betti': poly.total(),
            'euler_characteristic': MorseService.euler_characteristic_moduli(
                bundle, payload.get('chi_min'), settings=settings
            ),
            'assumptions': [PERFECT_MORSE],
        }

    @staticmethod
    def spectral_report(payload: Mapping, settings=None) -> Dict:
        bundle = payload['bundle']
        report = SpectralService.spectral_data(bundle).to_dict()
        reduced = RankTwoService.reduce_to_n0_zero(bundle).bundle
        if reduced.genus == 1 and reduced.n_free == 1:
            degree, isotropy = SpectralService.special_case_subbundle_degrees(bundle)
            report['special_case'] = {'degree': format_rational(degree), 'isotropy': isotropy}
        else:
            report['special_case'] = None
        report['nonstable_locus'] = SpectralService.nonstable_locus(bundle)
        return report

    @staticmethod
    def reps_report(payload: Mapping, settings=None) -> Dict:
        surface = payload['surface']
        det: LineVBundle = payload['lambda']
        circle = RepsService.circle_group_presentation(det)
        report = {
            'lambda': det.to_dict(),
            'euler_class': format_rational(RepsService.euler_class(surface, det.b, det.y)),
            'circle_presentation': circle.to_dict(),
            'z2_presentation': RepsService.circle_group_presentation(det, z2=True).to_dict(),
            'rotation_numbers': [rd.to_dict() for rd in RepsService.compatible_rotation_numbers(det)],
            'teichmuller_component': (
                RepsService.teichmuller_component(surface).to_dict() if surface.hyperbolic else None
            ),
            'psl2r_component': ReportService._psl2r(det),
        }
        rotation = payload.get('rotation')
        if rotation is not None:
            witness = RepsService.rep_reducible(det, rotation, settings=settings)
            report['rotation'] = {
                **rotation.to_dict(),
                'dimension': RepsService.rep_variety_dimension(det, rotation),
                'reducible': witness.to_list() if witness is not None else None,
                'sign_twist_orbit': [rd.to_dict() for rd in RepsService.sign_twist_orbit(det, rotation)],
                'parity_consistent': RepsService.rotation_parity_consistent(
                    RepsService.circle_group_presentation(det, z2=True), rotation
                ),
            }
        if payload.get('euler_class') is not None:
            e = payload['euler_class']
            report['milnor_wood'] = {
                'euler_class': format_rational(e),
                'bound': format_rational(-surface.euler_characteristic),
                'holds': RepsService.milnor_wood(surface, e),
            }
        return report

    @staticmethod
    def _psl2r(det: LineVBundle) -> Optional[Dict]:
        """Component for Lambda's Euler class when it lies in the PSL2R range"""
        try:
            return RepsService.psl2r_component(det.surface, det.b, det.y).to_dict()
        except HypothesisError as e:
            logger.debug(f"no PSL2R component for {det!r}: {e.message}")
            return None

    @staticmethod
    def check_report(payload: Mapping, settings=None) -> Dict:
        from orbimod.services.check_service import CheckService

        return CheckService.run_all(settings)


REPORT_BUILDERS = {
    'surface': ReportService.surface_report,
    'bundle': ReportService.bundle_report,
    'strata': ReportService.strata_report,
    'poincare': ReportService.poincare_report,
    'spectral': ReportService.spectral_report,
    'reps': ReportService.reps_report,
    'check': ReportService.check_report,
}
