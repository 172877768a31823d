import os

from ..core.constants import CACHE_DIR_ENV, DEFAULT_CACHE_DIR

def get_number_of_cpus() -> int:
    '''
    Returns the number of cpus available to the process calling the function.
    It uses the scheduler affinity mask when the platform has one.
    '''
    try:
        return max(1, len(os.sched_getaffinity(0)))
    except AttributeError:
        return max(1, os.cpu_count() or 1)

def get_cache_dir(cache_dir = None) -> str:
    '''
    Resolves the cache directory. In order of precedence:
    the ``cache_dir`` argument, the ``GAMMAFLOW_CACHE_DIR`` environment variable,
    and ``./.gammaflow_cache``.
    '''
    if cache_dir:
        return cache_dir
    env_var = os.environ.get(CACHE_DIR_ENV, None)
    if env_var is not None and len(env_var.strip()) > 0:
        return env_var.strip()
    return os.path.join(os.getcwd(), DEFAULT_CACHE_DIR)
