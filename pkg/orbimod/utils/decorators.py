import logging
from functools import wraps

from orbimod.errors import EnumerationLimitError, OrbimodError

logger = logging.getLogger(__name__)


def log_activity(action):
    """Decorator to log a service operation and any domain error it raises"""
    def decorator(f):
        @wraps(f)
        def decorated_function(*args, **kwargs):
            logger.debug(f"{action}: start")
            try:
                result = f(*args, **kwargs)
            except OrbimodError as e:
                logger.info(f"{action} rejected: {e.message}")
                raise
            logger.debug(f"{action}: done")
            return result

        return decorated_function
    return decorator


def _free_points(bundle, *args, **kwargs):
    return bundle.n_free


def enumeration_limit(size=_free_points):
    """Decorator to refuse exhaustive sign searches beyond the configured cap

    `size` maps the call arguments to the number of free signs. The cap is
    read from the `settings` keyword when given, else from the default profile.
    """
    def decorator(f):
        @wraps(f)
        def decorated_function(*args, **kwargs):
            from orbimod.config import config

            settings = kwargs.get('settings') or config['default']
            cap = settings.ENUMERATION_CAP
            k = size(*args, **kwargs)
            if k > cap:
                raise EnumerationLimitError(
                    f"{k} free signs exceed the enumeration cap of {cap}",
                    citation="exhaustive search over 2^(n-n0) isotropy vectors",
                )
            return f(*args, **kwargs)

        return decorated_function
    return decorator
