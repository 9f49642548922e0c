from orbimod.services.core_service import CoreService
from orbimod.services.ranktwo_service import RankTwoService
from orbimod.services.morse_service import MorseService
from orbimod.services.spectral_service import SpectralService
from orbimod.services.reps_service import RepsService
from orbimod.services.check_service import CheckService
from orbimod.services.report_service import REPORT_BUILDERS, ReportService

__all__ = [
    'CoreService', 'RankTwoService', 'MorseService', 'SpectralService', 'RepsService',
    'CheckService', 'ReportService', 'REPORT_BUILDERS',
]
