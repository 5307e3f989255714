"""Clique-based code search: optimal codes are maximum cliques in compatibility graphs.

Unrestricted search puts every ternary word (within a weight window) on a
vertex and joins pairs at dist_b >= dbmin; a clique is then a code. Restricted
search works over binary outer words instead, weighting each vertex by the
size of the best inner code its weight can carry, so a maximum weighted clique
is the best code this toolkit's binary construction can produce.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from itertools import product
from typing import Callable

import numpy as np
from scipy import optimize, sparse

from .construct import ConstructionPlan, build_code
from .core import BinaryBlockCode, Code, Word
from .library import single_parity_check, zero_code
from .metric import min_dist_b

DEFAULT_MAX_VERTICES = 20_000
DEFAULT_MAX_EDGES = 2_000_000


class BudgetExceededError(RuntimeError):
    """The requested graph or search is larger than the configured budget."""


@dataclass(frozen=True)
class SearchGraph:
    """Compatibility graph; adjacency rows are bitmasks over vertex indexes.

    word_symmetry marks graphs whose vertex set is a full weight window, so
    that coordinate permutations and per-coordinate swaps of the non-zero
    symbols act on the graph; the exact solver exploits this when set.
    """

    vertices: tuple[Word, ...]
    weights: tuple[int, ...]
    adj: tuple[int, ...]
    dbmin: int
    wmin: int
    wmax: int
    word_symmetry: bool = False

    def edge_count(self) -> int:
        return sum(mask.bit_count() for mask in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()


@dataclass(frozen=True)
class CliqueResult:
    """A clique and its weighted size; exact marks exhaustively proven optima."""

    members: tuple[Word, ...]
    total_weight: int
    exact: bool
    seed: int | None = None
    iterations: int | None = None

    @property
    def size(self) -> int:
        return len(self.members)


def _symbol_matrix(words: list[Word]) -> np.ndarray:
    return np.array([w.symbols for w in words], dtype=np.int8)


def _adjacency_masks(symbols: np.ndarray, dbmin: int) -> tuple[int, ...]:
    """Bitmask rows of the relation dist_b(u, v) >= dbmin over all word pairs."""
    nonzero = symbols != 0
    masks = []
    for i in range(symbols.shape[0]):
        differ = symbols != symbols[i]
        two_step = differ & nonzero & nonzero[i]
        db = differ.sum(axis=1) + two_step.sum(axis=1)
        row = db >= dbmin
        row[i] = False
        masks.append(int.from_bytes(np.packbits(row, bitorder="little").tobytes(), "little"))
    return tuple(masks)


def _check_window(n: int, wmin: int, wmax: int | None) -> int:
    if wmax is None:
        wmax = n
    if not 0 <= wmin <= wmax <= n:
        raise ValueError(f"weight window [{wmin}, {wmax}] invalid for length {n}")
    return wmax


def build_unrestricted_graph(
    n: int,
    dbmin: int,
    wmin: int = 0,
    wmax: int | None = None,
    max_vertices: int = DEFAULT_MAX_VERTICES,
) -> SearchGraph:
    """Graph over all ternary words with weight in [wmin, wmax]."""
    wmax = _check_window(n, wmin, wmax)
    count = sum(math.comb(n, w) * (1 << w) for w in range(wmin, wmax + 1))
    if count > max_vertices:
        raise BudgetExceededError(f"{count} vertices exceed the cap {max_vertices}")
    words = [
        Word(3, symbols)
        for symbols in product(range(3), repeat=n)
        if wmin <= sum(1 for s in symbols if s) <= wmax
    ]
    masks = _adjacency_masks(_symbol_matrix(words), dbmin)
    return SearchGraph(
        tuple(words), (1,) * len(words), masks, dbmin, wmin, wmax, word_symmetry=True
    )


def build_restricted_graph(
    n: int,
    dbmin: int,
    wmin: int = 0,
    wmax: int | None = None,
    weight_oracle: Callable[[int], int] | None = None,
    max_vertices: int = DEFAULT_MAX_VERTICES,
) -> SearchGraph:
    """Weighted graph over binary outer words; vertex weight is the size of the
    best inner code (minimum Hamming distance ceil(dbmin / 2)) for that weight."""
    wmax = _check_window(n, wmin, wmax)
    inner_dist = math.ceil(dbmin / 2)
    if weight_oracle is None:
        weight_oracle = lambda length: optimal_binary_code_size(length, inner_dist)
    count = sum(math.comb(n, w) for w in range(wmin, wmax + 1))
    if count > max_vertices:
        raise BudgetExceededError(f"{count} vertices exceed the cap {max_vertices}")
    words = [
        Word(2, symbols)
        for symbols in product(range(2), repeat=n)
        if wmin <= sum(symbols) <= wmax
    ]
    weights = tuple(weight_oracle(sum(w.symbols)) for w in words)
    if any(weight < 1 for weight in weights):
        raise ValueError("vertex weights must be >= 1")
    masks = _adjacency_masks(_symbol_matrix(words), dbmin)
    return SearchGraph(
        tuple(words), weights, masks, dbmin, wmin, wmax, word_symmetry=True
    )


def _iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def greedy_clique(graph: SearchGraph, seed: int, iterations: int) -> CliqueResult:
    """Randomized greedy independent-set construction on the complement graph.

    Vertices of complement degree at most one are always safe to keep (their
    closed neighborhood leaves at most one rival); while none exists, the most
    conflicted vertex is discarded. Iteration i reseeds with seed XOR i and the
    heaviest result wins.
    """
    if iterations < 1:
        raise ValueError(f"iterations must be >= 1, got {iterations}")
    v_count = len(graph.vertices)
    full = (1 << v_count) - 1
    complement = [
        full & ~graph.adj[v] & ~(1 << v) for v in range(v_count)
    ]
    weights = graph.weights
    best_members: list[int] = []
    best_weight = -1
    for iteration in range(iterations):
        rng = random.Random(seed ^ iteration)
        active = full
        members: list[int] = []
        while active:
            degrees = {v: (complement[v] & active).bit_count() for v in _iter_bits(active)}
            low = [v for v, d in degrees.items() if d <= 1]
            if low:
                top = max(weights[v] for v in low)
                pool = [v for v in low if weights[v] == top]
                v = rng.choice(pool)
                members.append(v)
                active &= ~(complement[v] | (1 << v))
            else:
                top = max(degrees.values())
                pool = [v for v, d in degrees.items() if d == top]
                v = rng.choice(pool)
                active &= ~(1 << v)
        total = sum(weights[v] for v in members)
        if total > best_weight:
            best_weight = total
            best_members = members
    chosen = tuple(sorted(graph.vertices[v] for v in best_members))
    return CliqueResult(chosen, best_weight, exact=False, seed=seed, iterations=iterations)


# Greedy pass that seeds the exact solver's incumbent; fixed for determinism.
_SEED_ITERATIONS = 24

# Transposition entries kept per exact search before insertion stops.
_MEMO_CAP = 4_000_000

# Clique depth up to which orbit grouping is attempted.
_ORBIT_DEPTH = 5

# Candidate-set size from which sphere-cover coloring is worth its scan cost.
_BALL_MIN = 48

# Branch-and-bound node limit before a dense instance escalates to the
# integer-programming formulation.
_NODE_CAP = 300_000


class _NodeCapReached(Exception):
    """The combinatorial search exceeded its node budget."""


class _CapReached(Exception):
    """The running subsearch hit its provable ceiling; unwind immediately."""


def _orbit_masks(
    pending: int,
    symbols: list[tuple[int, ...]],
    chosen: list[tuple[int, ...]],
    q: int,
) -> dict[int, int]:
    """Group candidates into orbits of the symmetry subgroup fixing the chosen words.

    A coordinate permutation must match whole columns of the chosen words, and
    a swap of the non-zero symbols is available only on all-zero columns, so
    two candidates are interchangeable exactly when their per-column tags
    agree as multisets. Maps each candidate to the bitmask of its orbit.
    """
    n = len(symbols[0]) if symbols else 0
    columns = tuple(tuple(row[i] for row in chosen) for i in range(n))
    free = tuple(not any(col) for col in columns)
    groups: dict[tuple, int] = {}
    members = []
    mask = pending
    while mask:
        low = mask & -mask
        v = low.bit_length() - 1
        mask ^= low
        sym = symbols[v]
        tag = sorted(
            (columns[i], 1 if q == 3 and free[i] and sym[i] == 2 else sym[i])
            for i in range(n)
        )
        key = tuple(tag)
        groups[key] = groups.get(key, 0) | low
        members.append((v, key))
    return {v: groups[key] for v, key in members}


def _ball_masks(graph: SearchGraph) -> list[int] | None:
    """Radius-t_A metric balls around every vertex, as candidate color classes.

    Any subset of such a ball is pairwise below dbmin, hence independent in
    the compatibility graph; covering candidates with balls colors them far
    tighter than first-fit when the graph is dense.
    """
    radius = (graph.dbmin - 1) // 2
    if radius < 1:
        return None
    symbols = _symbol_matrix(list(graph.vertices))
    nonzero = symbols != 0
    balls = []
    for i in range(symbols.shape[0]):
        differ = symbols != symbols[i]
        db = differ.sum(axis=1) + (differ & nonzero & nonzero[i]).sum(axis=1)
        row = db <= radius
        balls.append(int.from_bytes(np.packbits(row, bitorder="little").tobytes(), "little"))
    return balls


def _exact_milp(graph: SearchGraph) -> tuple[int, int]:
    """Maximum clique as an integer program over sphere exclusion constraints.

    A radius-t_A ball is pairwise below dbmin, so a clique meets it at most
    once; pair constraints cover the non-adjacent pairs no ball contains
    (needed when dbmin is even). Intended for dense word graphs where the
    combinatorial bound stalls; the solved vector is re-verified as a clique.
    """
    v_count = len(graph.vertices)
    balls = _ball_masks(graph) or []
    covered = [0] * v_count
    rows: list[int] = []
    for ball in balls:
        if ball.bit_count() >= 2:
            rows.append(ball)
            for v in _iter_bits(ball):
                covered[v] |= ball
    full = (1 << v_count) - 1
    for u in range(v_count):
        missing = full & ~graph.adj[u] & ~covered[u] & ~((1 << (u + 1)) - 1)
        for v in _iter_bits(missing):
            rows.append((1 << u) | (1 << v))
    if not rows:
        return sum(graph.weights), full
    data, indices, indptr = [], [], [0]
    for row in rows:
        for v in _iter_bits(row):
            data.append(1.0)
            indices.append(v)
        indptr.append(len(indices))
    matrix = sparse.csr_matrix(
        (data, indices, indptr), shape=(len(rows), v_count)
    )
    result = optimize.milp(
        c=-np.array(graph.weights, dtype=float),
        constraints=optimize.LinearConstraint(matrix, -np.inf, 1.0),
        integrality=np.ones(v_count),
        bounds=optimize.Bounds(0.0, 1.0),
    )
    if result.status != 0:
        raise RuntimeError(f"integer program failed with status {result.status}")
    mask = 0
    for v, x in enumerate(result.x):
        if x > 0.5:
            mask |= 1 << v
    for v in _iter_bits(mask):
        others = mask & ~(1 << v)
        if others & ~graph.adj[v]:
            raise RuntimeError("integer program returned a non-clique")
    weight = sum(graph.weights[v] for v in _iter_bits(mask))
    return weight, mask


def _exact_orbital(
    graph: SearchGraph,
    start_weight: int,
    start_mask: int,
    node_cap: int | None = None,
) -> tuple[int, int]:
    """Maximum clique on a word-symmetric unweighted graph by orbital branch and bound.

    Candidate sets stay invariant under the stabilizer of the growing clique
    because whole orbits are eliminated after their representative has been
    branched; once a node falls back to per-vertex elimination (tiny candidate
    sets), its subtree keeps the plain scheme. Raises _NodeCapReached when the
    node budget runs out.
    """
    adj = list(graph.adj)
    symbols = [w.symbols for w in graph.vertices]
    q = graph.vertices[0].q if graph.vertices else 3
    v_count = len(graph.vertices)
    balls = _ball_masks(graph)
    best_weight = start_weight
    best_mask = start_mask
    memo: dict[int, int] = {}
    nodes = 0

    def expand(
        chosen: list[tuple[int, ...]],
        clique_mask: int,
        size: int,
        candidates: int,
        invariant: bool,
    ) -> None:
        nonlocal best_weight, best_mask, nodes
        nodes += 1
        if node_cap is not None and nodes > node_cap:
            raise _NodeCapReached
        if candidates == 0:
            if size > best_weight:
                best_weight = size
                best_mask = clique_mask
            return
        known = memo.get(candidates)
        if known is not None and size + known <= best_weight:
            return
        gap = best_weight - size
        classes: list[int] = []
        remaining = candidates
        if balls is not None and remaining.bit_count() >= _BALL_MIN:
            while remaining.bit_count() >= _BALL_MIN:
                take = 0
                take_count = 0
                for center in range(v_count):
                    cover = balls[center] & remaining
                    count = cover.bit_count()
                    if count > take_count:
                        take, take_count = cover, count
                if take_count < 4:
                    break
                remaining &= ~take
                classes.append(take)
        while remaining:
            class_mask = 0
            pool = remaining
            while pool:
                low = pool & -pool
                v = low.bit_length() - 1
                class_mask |= low
                pool &= ~low
                pool &= ~adj[v]
            remaining &= ~class_mask
            if len(classes) >= gap > 0:
                kept = class_mask
                for v in _iter_bits(class_mask):
                    bit = 1 << v
                    av = adj[v]
                    for c1 in range(gap):
                        overlap = av & classes[c1]
                        if overlap and (overlap & (overlap - 1)) == 0:
                            w = overlap.bit_length() - 1
                            aw = adj[w]
                            for c2 in range(gap):
                                if c2 != c1 and not (aw & classes[c2]):
                                    classes[c1] = (classes[c1] & ~overlap) | bit
                                    classes[c2] |= overlap
                                    kept &= ~bit
                                    break
                            else:
                                continue
                            break
                        if not overlap:
                            classes[c1] |= bit
                            kept &= ~bit
                            break
                class_mask = kept
                if not class_mask:
                    continue
            classes.append(class_mask)
        branch_v: list[int] = []
        branch_bound: list[int] = []
        for color in range(max(gap, 0), len(classes)):
            for v in _iter_bits(classes[color]):
                branch_v.append(v)
                branch_bound.append(color + 1)
        # stabilizers are large only near the root; deeper nodes would pay the
        # grouping cost for all-singleton orbits
        use_orbits = (
            invariant and len(chosen) < _ORBIT_DEPTH and candidates.bit_count() > 16
        )
        orbit_of = (
            _orbit_masks(candidates, symbols, chosen, q) if use_orbits else None
        )
        full_set = candidates
        for i in range(len(branch_v) - 1, -1, -1):
            if size + branch_bound[i] <= best_weight:
                break
            v = branch_v[i]
            bit = 1 << v
            if not (candidates & bit):
                continue
            chosen.append(symbols[v])
            expand(chosen, clique_mask | bit, size + 1, candidates & adj[v], use_orbits)
            chosen.pop()
            candidates &= ~orbit_of[v] if orbit_of else ~bit
        if len(memo) < _MEMO_CAP:
            reachable = best_weight - size
            prior = memo.get(full_set)
            if prior is None or reachable < prior:
                memo[full_set] = reachable

    expand([], 0, 0, (1 << v_count) - 1, True)
    return best_weight, best_mask


def exact_clique(graph: SearchGraph, max_edges: int = DEFAULT_MAX_EDGES) -> CliqueResult:
    """Maximum(-weight) clique by branch and bound. Deterministic.

    Two bounds prune the tree. Greedy coloring: color classes are independent
    sets, so a clique takes at most one vertex per class, and the cumulative
    per-class maxima bound every prefix of the coloring order. Subproblem
    table: vertices are processed in reverse static order and c[i] records an
    upper bound for the subgraph on vertices i.., so any candidate set lying
    inside that tail is bounded by c[i]; a tail can beat the previous one by
    at most its own vertex weight, which caps each pass. A deterministic
    greedy pass seeds the incumbent.
    """
    edges = graph.edge_count()
    if edges > max_edges:
        raise BudgetExceededError(f"{edges} edges exceed the budget {max_edges}")
    v_count = len(graph.vertices)
    seed_result = greedy_clique(graph, seed=0, iterations=_SEED_ITERATIONS)
    vertex_index = {w: i for i, w in enumerate(graph.vertices)}
    seed_mask = 0
    for member in seed_result.members:
        seed_mask |= 1 << vertex_index[member]

    if graph.word_symmetry and all(w == 1 for w in graph.weights):
        # only cap the combinatorial search when the sphere formulation can
        # take over (spheres degenerate to singletons below dbmin = 3)
        cap = _NODE_CAP if (graph.dbmin - 1) // 2 >= 1 else None
        try:
            weight, mask = _exact_orbital(
                graph, seed_result.total_weight, seed_mask, cap
            )
        except _NodeCapReached:
            weight, mask = _exact_milp(graph)
        members = tuple(sorted(graph.vertices[v] for v in _iter_bits(mask)))
        return CliqueResult(members, weight, exact=True)

    order = sorted(range(v_count), key=lambda v: (-graph.degree(v), v))
    position = [0] * v_count
    for new, old in enumerate(order):
        position[old] = new
    adj = [0] * v_count
    for new, old in enumerate(order):
        mask = 0
        for old_neighbor in _iter_bits(graph.adj[old]):
            mask |= 1 << position[old_neighbor]
        adj[new] = mask
    weights = [graph.weights[old] for old in order]

    best_weight = seed_result.total_weight
    best_mask = 0
    for member in seed_result.members:
        best_mask |= 1 << position[vertex_index[member]]

    tail_bound = [0] * (v_count + 1)
    unweighted = all(w == 1 for w in weights)
    # cand -> proven upper bound on the extra weight reachable inside cand;
    # bounds certified on a node's normal return stay valid graph-wide
    memo: dict[int, int] = {}

    def expand_weighted(clique_mask: int, clique_weight: int, candidates: int, cap: int) -> None:
        nonlocal best_weight, best_mask
        if candidates == 0:
            if clique_weight > best_weight:
                best_weight = clique_weight
                best_mask = clique_mask
                if best_weight >= cap:
                    raise _CapReached
            return
        lowest = (candidates & -candidates).bit_length() - 1
        if clique_weight + tail_bound[lowest] <= best_weight:
            return
        known = memo.get(candidates)
        if known is not None and clique_weight + known <= best_weight:
            return
        order_v: list[int] = []
        bound_v: list[int] = []
        remaining = candidates
        cumulative = 0
        while remaining:
            class_mask = 0
            class_best = 0
            pool = remaining
            while pool:
                low = pool & -pool
                v = low.bit_length() - 1
                class_mask |= low
                if weights[v] > class_best:
                    class_best = weights[v]
                pool &= ~low
                pool &= ~adj[v]
            remaining &= ~class_mask
            cumulative += class_best
            for v in _iter_bits(class_mask):
                order_v.append(v)
                bound_v.append(cumulative)
        full_set = candidates
        for i in range(len(order_v) - 1, -1, -1):
            if clique_weight + bound_v[i] <= best_weight:
                break
            v = order_v[i]
            bit = 1 << v
            expand_weighted(
                clique_mask | bit, clique_weight + weights[v], candidates & adj[v], cap
            )
            candidates &= ~bit
        if len(memo) < _MEMO_CAP:
            reachable = best_weight - clique_weight
            prior = memo.get(full_set)
            if prior is None or reachable < prior:
                memo[full_set] = reachable

    def expand_unit(clique_mask: int, clique_size: int, candidates: int, cap: int) -> None:
        # unweighted fast path: a vertex only branches when its color exceeds
        # the incumbent gap, and a recoloring swap may still demote it below
        nonlocal best_weight, best_mask
        if candidates == 0:
            if clique_size > best_weight:
                best_weight = clique_size
                best_mask = clique_mask
                if best_weight >= cap:
                    raise _CapReached
            return
        lowest = (candidates & -candidates).bit_length() - 1
        if clique_size + tail_bound[lowest] <= best_weight:
            return
        known = memo.get(candidates)
        if known is not None and clique_size + known <= best_weight:
            return
        gap = best_weight - clique_size
        classes: list[int] = []
        branch_v: list[int] = []
        branch_bound: list[int] = []
        remaining = candidates
        while remaining:
            class_mask = 0
            pool = remaining
            while pool:
                low = pool & -pool
                v = low.bit_length() - 1
                class_mask |= low
                pool &= ~low
                pool &= ~adj[v]
            remaining &= ~class_mask
            color = len(classes) + 1
            if color > gap and gap > 0:
                kept = class_mask
                for v in _iter_bits(class_mask):
                    bit = 1 << v
                    av = adj[v]
                    for c1 in range(gap):
                        overlap = av & classes[c1]
                        if overlap and (overlap & (overlap - 1)) == 0:
                            w = overlap.bit_length() - 1
                            aw = adj[w]
                            for c2 in range(gap):
                                if c2 != c1 and not (aw & classes[c2]):
                                    classes[c1] = (classes[c1] & ~overlap) | bit
                                    classes[c2] |= overlap
                                    kept &= ~bit
                                    break
                            else:
                                continue
                            break
                        if not overlap:
                            classes[c1] |= bit
                            kept &= ~bit
                            break
                class_mask = kept
                if not class_mask:
                    continue
            classes.append(class_mask)
            if color > gap:
                for v in _iter_bits(class_mask):
                    branch_v.append(v)
                    branch_bound.append(color)
        full_set = candidates
        for i in range(len(branch_v) - 1, -1, -1):
            if clique_size + branch_bound[i] <= best_weight:
                break
            v = branch_v[i]
            bit = 1 << v
            expand_unit(clique_mask | bit, clique_size + 1, candidates & adj[v], cap)
            candidates &= ~bit
        if len(memo) < _MEMO_CAP:
            reachable = best_weight - clique_size
            prior = memo.get(full_set)
            if prior is None or reachable < prior:
                memo[full_set] = reachable

    expand = expand_unit if unweighted else expand_weighted
    for i in range(v_count - 1, -1, -1):
        cap = tail_bound[i + 1] + weights[i]
        if best_weight < cap:
            try:
                above = ~((1 << (i + 1)) - 1)
                expand(1 << i, weights[i], adj[i] & above, cap)
            except _CapReached:
                pass
        tail_bound[i] = min(cap, best_weight)

    members = tuple(sorted(graph.vertices[order[v]] for v in _iter_bits(best_mask)))
    return CliqueResult(members, best_weight, exact=True)


_OPTIMAL_BINARY: dict[tuple[int, int], BinaryBlockCode] = {}


def optimal_binary_code(length: int, min_dist: int) -> BinaryBlockCode:
    """A largest binary code of this length with minimum Hamming distance >= min_dist.

    Distances up to 2 have closed forms (the full space and the even-weight
    code); beyond that a clique search over the binary Hamming graph settles
    it. Results are memoized per (length, distance).
    """
    if length < 0:
        raise ValueError(f"length must be non-negative, got {length}")
    if min_dist < 1:
        raise ValueError(f"distance must be >= 1, got {min_dist}")
    key = (length, min_dist)
    if key in _OPTIMAL_BINARY:
        return _OPTIMAL_BINARY[key]
    if length == 0 or min_dist > length:
        code = zero_code(length)
    elif min_dist == 1:
        rows = [Word(2, tuple(1 if j == i else 0 for j in range(length))) for i in range(length)]
        code = BinaryBlockCode.from_generator(rows)
    elif min_dist == 2:
        code = single_parity_check(length) if length >= 2 else zero_code(1)
    else:
        graph = _binary_hamming_graph(length, min_dist)
        result = exact_clique(graph)
        code = BinaryBlockCode(length, frozenset(result.members))
    _OPTIMAL_BINARY[key] = code
    return code


def optimal_binary_code_size(
    length: int, min_dist: int, overrides: dict[int, int] | None = None
) -> int:
    """Size of the best binary code; overrides supply known values by length."""
    if overrides and length in overrides:
        return overrides[length]
    return optimal_binary_code(length, min_dist).size


def _binary_hamming_graph(n: int, min_dist: int) -> SearchGraph:
    words = [Word(2, symbols) for symbols in product(range(2), repeat=n)]
    masks = _adjacency_masks(_symbol_matrix(words), min_dist)
    return SearchGraph(tuple(words), (1,) * len(words), masks, min_dist, 0, n)


def search_code(
    n: int,
    dbmin: int,
    mode: str,
    *,
    wmin: int = 0,
    wmax: int | None = None,
    algo: str = "exact",
    seed: int = 0,
    iterations: int = 100,
    max_vertices: int = DEFAULT_MAX_VERTICES,
    max_edges: int = DEFAULT_MAX_EDGES,
) -> tuple[Code, CliqueResult]:
    """Run a search and materialize the winning clique as a ternary code.

    Unrestricted cliques are codes already; restricted cliques become codes by
    attaching an optimal inner code to every outer codeword. The materialized
    code is re-verified against dbmin before being returned.
    """
    if mode not in ("unrestricted", "restricted"):
        raise ValueError(f"unknown mode {mode!r}")
    if algo not in ("exact", "greedy"):
        raise ValueError(f"unknown algorithm {algo!r}")
    if mode == "unrestricted":
        graph = build_unrestricted_graph(n, dbmin, wmin, wmax, max_vertices)
    else:
        graph = build_restricted_graph(n, dbmin, wmin, wmax, None, max_vertices)
    if algo == "exact":
        result = exact_clique(graph, max_edges)
    else:
        result = greedy_clique(graph, seed, iterations)
    if mode == "unrestricted":
        code = Code(3, n, frozenset(result.members))
    else:
        inner_dist = math.ceil(dbmin / 2)
        outer = BinaryBlockCode(n, frozenset(result.members))
        needed = {sum(w.symbols) for w in result.members}
        plan = ConstructionPlan(
            outer,
            {w: optimal_binary_code(w, inner_dist) for w in needed},
            dbmin,
        )
        code = build_code(plan)
        if code.size != result.total_weight:
            raise RuntimeError(
                f"materialized {code.size} codewords, clique weight {result.total_weight}"
            )
    if code.size >= 2 and min_dist_b(code) < dbmin:
        raise RuntimeError("materialized code violates the distance target")
    return code, result
