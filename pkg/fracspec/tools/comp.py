"""Module providing basic computer-related functions

A basic module providing methods related to basic computer operations,
for FRACSPEC tools: size of the thread pool and ordered parallel maps.

"""

import os
import typing as tp
from concurrent.futures import ThreadPoolExecutor

from fracspec.base import ConfigError


# =================
# Module Attributes
# =================

ENV_THREADS = 'FRACSPEC_THREADS'

_T = tp.TypeVar('_T')
_R = tp.TypeVar('_R')


# ==============
# Module Methods
# ==============

def convert_threads(label: tp.Optional[str]) -> int:
    """Converts a thread specification to a number of threads.

    Parameters
    ----------
    label
        Number of threads as string; empty, None or 0 means as many
        threads as available CPUs.

    Returns
    -------
    int
        Number of threads (>= 1).

    Raises
    ------
    ConfigError
        Unsupported or negative specification.
    """
    if label is None or not label.strip():
        value = 0
    else:
        try:
            value = int(label.strip())
        except ValueError as err:
            raise ConfigError(ENV_THREADS,
                              f'Unsupported thread count: {label}') from err
    if value < 0:
        raise ConfigError(ENV_THREADS, 'Thread count must be non-negative')
    if value == 0:
        value = os.cpu_count() or 1
    return value


def num_threads() -> int:
    """Number of threads allowed by the environment."""
    return convert_threads(os.environ.get(ENV_THREADS))


def ordered_map(func: tp.Callable[[_T], _R],
                items: tp.Iterable[_T],
                nthreads: tp.Optional[int] = None) -> tp.List[_R]:
    """Apply a function to items, possibly in parallel.

    Results are returned in the order of `items`, whatever the
    scheduling.

    Parameters
    ----------
    func
        Function to apply, must be reentrant.
    items
        Items.
    nthreads
        Number of threads (default: from the environment).

    Returns
    -------
    list
        Results, in the order of `items`.
    """
    items = list(items)
    if nthreads is None:
        nthreads = num_threads()
    if nthreads <= 1 or len(items) <= 1:
        return [func(item) for item in items]
    with ThreadPoolExecutor(max_workers=min(nthreads, len(items))) as pool:
        return list(pool.map(func, items))
