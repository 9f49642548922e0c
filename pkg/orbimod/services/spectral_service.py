"""
Spectral Service Layer
Determinant-map (Hitchin fibration) bookkeeping for rank-2 Higgs V-bundles
"""

import logging
from fractions import Fraction
from typing import Dict, Tuple

from orbimod.errors import HypothesisError
from orbimod.models import RankTwoVBundle, SpectralData
from orbimod.services.ranktwo_service import RankTwoService
from orbimod.utils.decorators import log_activity

logger = logging.getLogger(__name__)


class SpectralService:
    """Service class for the determinant map and its generic fibres"""

    @staticmethod
    def hitchin_base_dim(bundle: RankTwoVBundle) -> int:
        """Dimension of the space of quadratic differentials the determinant maps to"""
        return 3 * bundle.genus - 3 + bundle.n_free

    @staticmethod
    @log_activity('spectral_data')
    def spectral_data(bundle: RankTwoVBundle) -> SpectralData:
        reduced = RankTwoService.reduce_to_n0_zero(bundle).bundle
        g, k = reduced.genus, reduced.n_free
        base_dim = SpectralService.hitchin_base_dim(reduced)
        if g == 0 and k < 3:
            raise HypothesisError(
                f"g = 0 with n - n0 = {k} gives a negative base dimension",
                citation="Hitchin base dimension 3g - 3 + n - n0 >= 0",
            )
        if g == 0 and k == 3:
            return SpectralData(base_dim, SpectralData.ZERO, 0)
        if g == 1 and k == 1:
            return SpectralData(base_dim, SpectralData.JACOBIAN, g)
        branch_points = 4 * g - 4 + 2 * k
        spectral_genus = 4 * g - 3 + k
        return SpectralData(base_dim, SpectralData.PRYM, spectral_genus - g, branch_points, spectral_genus)

    @staticmethod
    def riemann_hurwitz_genus(genus: int, branch_points: int) -> int:
        """Genus of a double cover of a genus-g curve with the given branch points"""
        twice = 2 * (2 * genus - 2) + branch_points + 2
        return twice // 2

    @staticmethod
    def special_case_subbundle_degrees(bundle: RankTwoVBundle) -> Tuple[Fraction, int]:
        """Degree and isotropy of the invariant sub-bundles L+- when g = n - n0 = 1"""
        reduced = RankTwoService.reduce_to_n0_zero(bundle).bundle
        if reduced.genus != 1 or reduced.n_free != 1:
            raise HypothesisError(
                f"needs g = n - n0 = 1, got g = {reduced.genus}, n - n0 = {reduced.n_free}",
                citation="special case g = n - n0 = 1",
            )
        (x, xp), alpha, r = reduced.pairs[0], reduced.surface.cone_orders[0], reduced.l
        if r % 2 == 0:
            return Fraction(r, 2) + Fraction(x, alpha), x
        return Fraction(r - 1, 2) + Fraction(xp, alpha), xp

    @staticmethod
    def nonstable_locus(bundle: RankTwoVBundle) -> Dict:
        """Citation-only description of where the underlying bundle fails to be stable"""
        k = bundle.n_free
        if bundle.genus == 1 and k == 1:
            return {
                'finite': True,
                'points': 4,
                'citation': "only finitely many non-stable bundles: the 2^(2g) = 4 square roots",
            }
        return {
            'finite': False,
            'points': None,
            'citation': "non-stable divisors of degree <= sum eps delta - n_+ + 2g - 2 have positive codimension",
        }
