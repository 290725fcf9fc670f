import math

from sombor.graph import new_graph

SQRT2 = math.sqrt(2)


def rel_close(a, b, rel):
    return abs(a - b) <= rel * max(abs(b), 1.0)


def chorded_hexagon():
    """3-regular graph on 6 vertices: hexagon plus the three long diagonals."""
    es = [(i, (i + 1) % 6) for i in range(6)] + [(0, 3), (1, 4), (2, 5)]
    return new_graph(6, es)


def multiset_close(a, b, atol):
    """Greedy matching: each value of ``a`` takes the nearest unused value of ``b``."""
    if len(a) != len(b):
        return False
    pool = list(b)
    for x in a:
        j = min(range(len(pool)), key=lambda i: abs(pool[i] - x))
        if abs(pool[j] - x) > atol:
            return False
        pool.pop(j)
    return True
