import logging
import os
import sys
from logging.handlers import RotatingFileHandler

import click

from orbimod import __version__
from orbimod.config import config
from orbimod.routes.commands import register_commands


def configure_logging(settings, verbosity=0):
    """Attach stderr and optional rotating-file handlers to the package logger"""
    logger = logging.getLogger('orbimod')
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
        handler.close()

    formatter = logging.Formatter(settings.LOG_FORMAT)
    level = settings.LOG_LEVEL
    if verbosity == 1:
        level = min(level, logging.INFO)
    elif verbosity >= 2:
        level = logging.DEBUG

    stream_handler = logging.StreamHandler(sys.stderr)
    stream_handler.setFormatter(formatter)
    stream_handler.setLevel(level)
    logger.addHandler(stream_handler)

    if settings.LOG_FILE and not settings.DEBUG and not settings.TESTING:
        log_dir = os.path.dirname(settings.LOG_FILE)
        if log_dir and not os.path.exists(log_dir):
            os.makedirs(log_dir)
        file_handler = RotatingFileHandler(
            settings.LOG_FILE, maxBytes=settings.LOG_MAX_BYTES, backupCount=settings.LOG_BACKUP_COUNT
        )
        file_handler.setFormatter(formatter)
        file_handler.setLevel(logging.INFO)
        logger.addHandler(file_handler)
        level = min(level, logging.INFO)

    logger.setLevel(level)
    logger.propagate = False
    return logger


def create_app(config_name='default'):
    """Application factory: the orbimod command group bound to a configuration profile"""

    @click.group(name='orbimod', context_settings={'help_option_names': ['-h', '--help']})
    @click.version_option(__version__, prog_name='orbimod')
    @click.option('--profile', type=click.Choice(sorted(config)), default=config_name, show_default=True,
                  help='Configuration profile.')
    @click.option('-v', '--verbose', count=True, help='Log INFO (-v) or DEBUG (-vv) to stderr.')
    @click.pass_context
    def app(ctx, profile, verbose):
        """Exact invariants of orbifold surfaces and rank-2 Higgs V-bundles."""
        settings = config[profile]
        ctx.obj = settings
        logger = configure_logging(settings, verbose)
        logger.debug(f"orbimod {__version__} startup, profile {profile}")

    register_commands(app)
    return app


def main():
    create_app()()


if __name__ == '__main__':
    main()
