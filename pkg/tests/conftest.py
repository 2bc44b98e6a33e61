import numpy as np


def multiset_close(a, b, tol):
    """Greedy nearest-neighbor matching of two complex multisets.

    Lexicographic sorting mispairs conjugate eigenvalue pairs whose real
    parts agree only to roundoff, so match each element to its closest
    unused partner instead.
    """
    a = list(np.asarray(a, dtype=complex))
    b = list(np.asarray(b, dtype=complex))
    if len(a) != len(b):
        return False
    remaining = b[:]
    for x in a:
        i = int(np.argmin([abs(x - y) for y in remaining]))
        if abs(x - remaining[i]) > tol:
            return False
        remaining.pop(i)
    return True
