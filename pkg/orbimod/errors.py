"""
Domain exceptions for orbimod

Every error raised by a model or service carries the precondition it
violates so the CLI can cite it back to the caller.
"""

from typing import Dict, List, Optional


class OrbimodError(Exception):
    """Base class for all domain errors"""

    exit_code = 1

    def __init__(self, message: str, citation: Optional[str] = None):
        super().__init__(message)
        self.message = message
        self.citation = citation

    def to_dict(self) -> Dict:
        """Convert error to a report payload"""
        return {
            'error': self.__class__.__name__,
            'message': self.message,
            'citation': self.citation,
            'exit_code': self.exit_code,
        }


class InvalidSurfaceError(OrbimodError, ValueError):
    """Negative genus, empty cone list or an isotropy order below 2"""


class InvalidBundleError(OrbimodError, ValueError):
    """Isotropy data out of range, surface mismatch or a bad point index"""


class IncompatibleIsotropyError(OrbimodError, ValueError):
    """Isotropy vector not zero exactly on the equal pairs of its bundle"""


class HypothesisError(OrbimodError):
    """A theorem's hypothesis does not hold for the given data"""


class InconsistentDataError(OrbimodError, ValueError):
    """User-supplied h0 values are negative or contradict each other"""


class EnumerationLimitError(OrbimodError):
    """Exhaustive isotropy-vector search would exceed the configured cap"""


class InvariantViolation(OrbimodError):
    """An identity that must hold on every input failed"""


class SchemaError(OrbimodError):
    """Input document failed schema validation"""

    exit_code = 2

    def __init__(self, message: str, fields: Optional[Dict[str, List[str]]] = None):
        super().__init__(message, citation=None)
        self.fields = dict(fields or {})

    def to_dict(self) -> Dict:
        payload = super().to_dict()
        payload['fields'] = self.fields
        return payload
