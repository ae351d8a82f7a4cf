"""Hot loops over the hypercube, compiled with numba when it is installed.

Without numba the same kernels run as plain Python; install the ``accel``
extra for full-size (n = 24) component counts.
"""
import numpy as np

try:
    from numba import njit
    GOT_NUMBA = True
except ImportError:
    def njit(*args, **kwargs):  # type: ignore[no-redef]
        if len(args) == 1 and callable(args[0]) and not kwargs:
            return args[0]

        def _identity_decorator_inner(fn):
            return fn
        return _identity_decorator_inner
    GOT_NUMBA = False


@njit(cache=True)
def count_components(table: np.ndarray, n: int) -> int:
    """Connected components of the 1-set under single-bit flips (BFS)"""
    size = table.shape[0]
    seen = np.zeros(size, dtype=np.bool_)
    queue = np.empty(size, dtype=np.int64)
    count = 0
    for start in range(size):
        if not table[start] or seen[start]:
            continue
        count += 1
        seen[start] = True
        head = 0
        tail = 1
        queue[0] = start
        while head < tail:
            v = queue[head]
            head += 1
            for i in range(n):
                w = v ^ (1 << i)
                if table[w] and not seen[w]:
                    seen[w] = True
                    queue[tail] = w
                    tail += 1
    return count


@njit(cache=True)
def separates(dist: np.ndarray, labels: np.ndarray, chosen: np.ndarray) -> bool:
    """True iff the chosen anchors label every point correctly with a strict winner.

    dist[x, a] is the Hamming distance between points x and a, labels[x] the
    target value at x; anchor a carries label labels[a].
    """
    size = dist.shape[0]
    big = dist.shape[1] + 64
    for x in range(size):
        best_one = big
        best_zero = big
        for j in range(chosen.shape[0]):
            a = chosen[j]
            d = dist[x, a]
            if labels[a]:
                if d < best_one:
                    best_one = d
            elif d < best_zero:
                best_zero = d
        if labels[x]:
            if not best_one < best_zero:
                return False
        elif not best_zero < best_one:
            return False
    return True


__all__ = ['GOT_NUMBA', 'njit', 'count_components', 'separates']
