from __future__ import annotations

from .._backend import get_kernels
from ..order import check_threshold
from ._common import common_relation, spread_arrays


def insertion_sort(items, xi: float, backend: str | None = None) -> list:
    """Insertion sort that only moves a key left past ``A[j]`` while
    ``less(key, A[j]) > xi``.

    With a positive threshold, numbers whose bases are close relative to
    their spreads are left where they are, so the result depends on ``xi``
    and on the input order. Returns a new list; ``items`` is not modified.
    """
    items = list(items)
    xi = check_threshold(xi)
    rel = common_relation(items)
    if len(items) < 2:
        return items
    base, left, right = spread_arrays(items)
    perm = get_kernels(backend).insertion_sort(rel.family.code, rel.k, base, left, right, xi)
    return [items[int(i)] for i in perm]
