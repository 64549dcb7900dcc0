"""
Multi-core execution helpers.

Workers are threads: the score kernels release the GIL, and rows share
the read-only encoded corpus without copies.
"""
from multiprocessing.pool import ThreadPool


def pool_function(func, items, method='imap', ncores=1):
    """
    Apply `func` over `items` with `ncores` workers.

    Results are yielded in the order of `items` whatever the number of
    workers, so reductions over them are deterministic.

    Parameters
    ----------
    func : callable
    items : iterable
    method : str
        ``'imap'`` or ``'map'``; both keep the input order.
    ncores : int
    """
    items = list(items)
    if ncores <= 1 or len(items) <= 1:
        for item in items:
            yield func(item)
        return

    with ThreadPool(min(ncores, len(items))) as pool:
        mapper = getattr(pool, method)
        yield from mapper(func, items)
