"""Independent reference implementations used only to check library results.

Everything here recomputes values from first principles (joint distributions,
exhaustive enumeration) without reusing the code paths under test.
"""

from __future__ import annotations

import math
from itertools import product


def joint_mutual_information(
    matrix: list[list[float]], dist: list[float], log_base: float
) -> float:
    """I(X;Y) summed directly over the joint distribution."""
    q_in = len(dist)
    q_out = len(matrix[0])
    out = [sum(dist[x] * matrix[x][y] for x in range(q_in)) for y in range(q_out)]
    total = 0.0
    for x in range(q_in):
        for y in range(q_out):
            joint = dist[x] * matrix[x][y]
            if joint > 0.0:
                total += joint * math.log(matrix[x][y] / out[y], log_base)
    return total


def ternary_matrix(p: float) -> list[list[float]]:
    return [
        [1 - p, p / 2, p / 2],
        [p / 2, 1 - p / 2, 0.0],
        [p / 2, 0.0, 1 - p / 2],
    ]


def ternary_mi(p: float, p0: float) -> float:
    """Mutual information in trits for the symmetric-in-1-2 input law."""
    return joint_mutual_information(
        ternary_matrix(p), [p0, (1 - p0) / 2, (1 - p0) / 2], 3.0
    )


def maximize_unimodal(f, lo: float, hi: float, grid: int = 200, tol: float = 1e-10):
    """Grid scan followed by golden-section refinement; returns (argmax, max)."""
    xs = [lo + i * (hi - lo) / grid for i in range(grid + 1)]
    best_i = max(range(len(xs)), key=lambda i: f(xs[i]))
    a = xs[max(0, best_i - 1)]
    b = xs[min(len(xs) - 1, best_i + 1)]
    inv_phi = (math.sqrt(5.0) - 1.0) / 2.0
    x1 = b - inv_phi * (b - a)
    x2 = a + inv_phi * (b - a)
    f1, f2 = f(x1), f(x2)
    while b - a > tol:
        if f1 < f2:
            a, x1, f1 = x1, x2, f2
            x2 = a + inv_phi * (b - a)
            f2 = f(x2)
        else:
            b, x2, f2 = x2, x1, f1
            x1 = b - inv_phi * (b - a)
            f1 = f(x1)
    mid = (a + b) / 2
    return mid, f(mid)


def brute_dist_b(u: tuple[int, ...], v: tuple[int, ...]) -> int:
    """Per-symbol dist_b computed without the library."""
    total = 0
    for a, b in zip(u, v):
        if a != b:
            total += 2 if (a != 0 and b != 0) else 1
    return total


def brute_dist_a(u: tuple[int, ...], v: tuple[int, ...]) -> float:
    total = 0
    for a, b in zip(u, v):
        if a != b:
            if a != 0 and b != 0:
                return math.inf
            total += 1
    return total


def brute_sphere_volume(n: int, center: tuple[int, ...], r: int) -> int:
    """Count ternary words within dist_b r of the center by full enumeration."""
    return sum(
        1 for v in product(range(3), repeat=n) if brute_dist_b(center, v) <= r
    )


def word_prob(x: tuple[int, ...], y: tuple[int, ...], p: float) -> float:
    """Channel transition probability of a whole ternary word."""
    matrix = ternary_matrix(p)
    prob = 1.0
    for a, b in zip(x, y):
        prob *= matrix[a][b]
    return prob


def brute_max_clique(adjacency: list[list[bool]]) -> int:
    """Maximum clique size by subset enumeration; tiny graphs only."""
    n = len(adjacency)
    best = 0
    for mask in range(1 << n):
        members = [v for v in range(n) if (mask >> v) & 1]
        if len(members) <= best:
            continue
        if all(
            adjacency[a][b] for i, a in enumerate(members) for b in members[i + 1 :]
        ):
            best = len(members)
    return best


def brute_max_weight_clique(adjacency: list[list[bool]], weights: list[int]) -> int:
    n = len(adjacency)
    best = 0
    for mask in range(1 << n):
        members = [v for v in range(n) if (mask >> v) & 1]
        total = sum(weights[v] for v in members)
        if total <= best:
            continue
        if all(
            adjacency[a][b] for i, a in enumerate(members) for b in members[i + 1 :]
        ):
            best = total
    return best
