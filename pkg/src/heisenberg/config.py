"""Size limits and logging setup."""

from __future__ import annotations

import logging
from dataclasses import dataclass

from rich.console import Console
from rich.logging import RichHandler

LOG_LEVELS = ["DEBUG", "INFO", "WARNING", "ERROR"]
LOG_FORMAT = "%(message)s"


@dataclass(frozen=True)
class Limits:
    """Guards against factorial blowup.

    Commands that accept ``--force`` lift ``max_table_degree`` through
    :func:`dataclasses.replace`.
    """

    max_perm_degree: int = 8
    max_table_degree: int = 10
    max_coset_degree: int = 7
    schur_weyl_alphabet: int = 6
    sample_points: int = 3


DEFAULT_LIMITS = Limits()


def configure_logging(level: str = "WARNING") -> None:
    """Send library logs to stderr through rich.

    Stdout is reserved for results so JSON output stays byte-stable.
    """
    handler = RichHandler(
        console=Console(stderr=True),
        show_path=False,
        show_time=False,
        markup=False,
    )
    logging.basicConfig(
        level=level.upper(),
        format=LOG_FORMAT,
        handlers=[handler],
        force=True,
    )
