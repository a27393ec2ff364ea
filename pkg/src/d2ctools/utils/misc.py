from datetime import timedelta
from typing import Iterable

import humanize


def format_elapsed(seconds: float) -> str:
    return humanize.precisedelta(timedelta(seconds=seconds), minimum_unit="milliseconds", format="%0.1f")


def int_list(values: Iterable[int]) -> str:
    """Compact integer array, e.g. [2,1,0]."""
    return "[" + ",".join(str(v) for v in values) + "]"
