"""Logging helpers for FRACSPEC.

All library loggers hang below the ``fracspec`` logger, which stays
silent unless a program installs a handler (see `set_verbosity`).
"""

import logging
import typing as tp

ROOT_NAME = 'fracspec'

logging.getLogger(ROOT_NAME).addHandler(logging.NullHandler())


def get_logger(name: tp.Optional[str] = None) -> logging.Logger:
    """Return a logger placed below the package logger.

    Parameters
    ----------
    name
        Module name, usually ``__name__``.  Names outside the package
        are nested under it.

    Returns
    -------
    logging.Logger
        Logger instance.
    """
    if not name:
        return logging.getLogger(ROOT_NAME)
    if name != ROOT_NAME and not name.startswith(ROOT_NAME + '.'):
        name = f'{ROOT_NAME}.{name}'
    return logging.getLogger(name)


def set_verbosity(level: int = 0,
                  stream: tp.Optional[tp.TextIO] = None) -> logging.Logger:
    """Attach a stream handler to the package logger.

    Parameters
    ----------
    level
        0: warnings, 1: info, 2 or more: debug.
    stream
        Output stream (default: stderr).

    Returns
    -------
    logging.Logger
        The package logger.
    """
    logger = logging.getLogger(ROOT_NAME)
    for handler in list(logger.handlers):
        if getattr(handler, '_fracspec_cli', False):
            logger.removeHandler(handler)
    handler = logging.StreamHandler(stream)
    handler._fracspec_cli = True
    handler.setFormatter(
        logging.Formatter('[%(levelname)s] %(name)s: %(message)s'))
    logger.addHandler(handler)
    logger.setLevel({0: logging.WARNING, 1: logging.INFO}.get(
        level, logging.DEBUG))
    return logger
