import multiprocessing.pool as mp
import os
from typing import Callable, Iterable, List, Optional, TypeVar

from tqdm import tqdm

from modfunctor.core.config import ModFunctorConfig

T = TypeVar("T")


class Pool:
    """Wrapper class for multiprocessing pool. With processes=1 work is mapped lazily on the main
    thread."""

    def __init__(
            self,
            processes: Optional[int]=None,
            initializer: Optional[Callable]=None,
            initargs: Optional[Iterable]=None,
            *args, **kwargs):
        self.initializer = initializer
        self.initargs = initargs or []
        if processes == 1 or os.name == "nt":
            self.pool = None
        else:
            self.pool = mp.Pool(processes, self.initializer, self.initargs, *args, **kwargs)

    def imap(self, func, iterable, chunksize=1):
        if self.pool is None:
            if self.initializer is not None:
                self.initializer(*self.initargs)
            return map(func, iterable)
        return self.pool.imap(func, iterable, chunksize)

    def __enter__(self, *args, **kwargs):
        if self.pool is not None:
            self.pool.__enter__(*args, **kwargs)
        return self

    def __exit__(self, *args, **kwargs):
        if self.pool is None:
            return None
        return self.pool.__exit__(*args, **kwargs)


def sweep(
        func: Callable[..., T],
        work: List,
        jobs: Optional[int]=None,
        description: Optional[str]=None,
) -> List[T]:
    """Apply ``func`` to every item of ``work``, preserving order.

    ``jobs`` defaults to ``ModFunctorConfig().jobs``. A progress bar is shown when the
    configuration is verbose.
    """
    config = ModFunctorConfig()
    jobs = config.jobs if jobs is None else jobs
    with Pool(processes=jobs) as pool:
        results = pool.imap(func, work)
        if config.verbose and description is not None:
            results = tqdm(results, total=len(work), desc=description, leave=False)
        return list(results)
