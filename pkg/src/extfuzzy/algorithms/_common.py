import numpy as np

from ..errors import DomainError
from ..relations import check_compatible


def common_relation(numbers):
    """Check that all numbers are mutually joinable and return the first relation."""
    numbers = list(numbers)
    if not numbers:
        return None
    first = numbers[0].relation
    for n in numbers[1:]:
        check_compatible(first, n.relation)
    return first


def spread_arrays(numbers):
    base = np.array([n.base for n in numbers], dtype=np.float64)
    left = np.array([n.relation.left for n in numbers], dtype=np.float64)
    right = np.array([n.relation.right for n in numbers], dtype=np.float64)
    return base, left, right


def check_node(node, n):
    if isinstance(node, bool) or not isinstance(node, int) or not 1 <= node <= n:
        raise DomainError(f"node id {node!r} is outside 1..{n}")
