"""Distance measures for the non-symmetric channel and derived code parameters.

Three distances appear throughout the toolkit:

* dist_a -- per-symbol {0, 1, inf}: the number of single-symbol channel errors
  needed to turn one word into the other, infinite when a forbidden transition
  between distinct non-zero symbols would be required.
* dist_b -- per-symbol {0, 1, 2}: the metric closure of dist_a; a change
  between two distinct non-zero symbols costs 2 because it must pass through 0.
  On binary words dist_b is the Hamming distance.
* dist_ml -- negative log-likelihood of the channel transition, so that
  minimizing it over a codebook performs maximum-likelihood decoding.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import Code, Word, _check_compatible

INF = math.inf


@dataclass(frozen=True)
class AgreementProfile:
    """Position counts: matching zeros, matching non-zeros, zero-involved
    disagreements, and disagreements between distinct non-zero symbols."""

    s0: int
    s1: int
    s2: int
    s3: int

    @property
    def n(self) -> int:
        return self.s0 + self.s1 + self.s2 + self.s3


def agreement_profile(u: Word, v: Word) -> AgreementProfile:
    """Classify every position of the pair into the four agreement classes."""
    _check_compatible(u, v)
    s0 = s1 = s2 = s3 = 0
    for a, b in zip(u.symbols, v.symbols):
        if a == b:
            if a == 0:
                s0 += 1
            else:
                s1 += 1
        elif a == 0 or b == 0:
            s2 += 1
        else:
            s3 += 1
    return AgreementProfile(s0, s1, s2, s3)


def dist_ml(u: Word, v: Word, p: float) -> float:
    """Negative natural log of the ternary transition probability, inf if zero.

    At p = 0 the channel is noiseless: the distance is 0 between equal words
    and inf otherwise. p = 2/3 is rejected because log(p/2) and log(1-p)
    coincide there and the measure stops ordering likelihoods.
    """
    if u.q != 3 or v.q != 3:
        raise ValueError("the likelihood distance is defined over the ternary alphabet")
    if not 0.0 <= p < 2.0 / 3.0:
        raise ValueError(f"error probability {p} outside [0, 2/3)")
    prof = agreement_profile(u, v)
    if prof.s3 > 0:
        return INF
    if p == 0.0:
        return 0.0 if prof.s2 == 0 else INF
    return (
        -prof.s0 * math.log(1.0 - p)
        - prof.s1 * math.log(1.0 - p / 2.0)
        - prof.s2 * math.log(p / 2.0)
    )


def dist_a(u: Word, v: Word) -> float:
    """Channel-error distance: one per zero-involved disagreement, inf when a
    disagreement joins two distinct non-zero symbols."""
    _check_compatible(u, v)
    total = 0
    for a, b in zip(u.symbols, v.symbols):
        if a == b:
            continue
        if a == 0 or b == 0:
            total += 1
        else:
            return INF
    return total


def dist_b(u: Word, v: Word) -> int:
    """Metric closure of dist_a: disagreements between non-zero symbols cost 2."""
    _check_compatible(u, v)
    total = 0
    for a, b in zip(u.symbols, v.symbols):
        if a == b:
            continue
        total += 1 if (a == 0 or b == 0) else 2
    return total


def min_dist_b(code: Code) -> int:
    """Minimum pairwise dist_b of a code; cached on the code object."""
    if code._dbmin_cache is not None:
        return code._dbmin_cache
    words = code.sorted_words()
    if len(words) < 2:
        raise ValueError("minimum distance needs at least two codewords")
    best = 2 * code.n
    for i, u in enumerate(words):
        for v in words[i + 1 :]:
            d = dist_b(u, v)
            if d < best:
                best = d
                if best == 1:
                    break
        if best == 1:
            break
    object.__setattr__(code, "_dbmin_cache", best)
    return best


def correction_capability(dbmin: int) -> int:
    """Guaranteed correction radius floor((dbmin - 1) / 2) under dist_a decoding."""
    if dbmin < 1:
        raise ValueError(f"minimum distance must be >= 1, got {dbmin}")
    return (dbmin - 1) // 2


def pmax(n: int, tol: float = 1e-12) -> float:
    """Largest p for which dist_a decoding is maximum likelihood at length n.

    For n <= 2 the threshold is 2/3. Otherwise it is the unique root in
    (0, 2/3) of (p/2)/(1-p) = ((1-p)/(1-p/2))^floor((n-1)/2), found by
    bisection: the left side grows with p while the right side falls.
    """
    if n < 1:
        raise ValueError(f"length must be >= 1, got {n}")
    exponent = (n - 1) // 2
    if exponent == 0:
        return 2.0 / 3.0

    def gap(p: float) -> float:
        return (p / 2.0) / (1.0 - p) - ((1.0 - p) / (1.0 - p / 2.0)) ** exponent

    lo, hi = 0.0, 2.0 / 3.0
    while hi - lo > tol:
        mid = (lo + hi) / 2.0
        if gap(mid) < 0.0:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2.0


@dataclass(frozen=True)
class LikelihoodBounds:
    """Extreme transition probabilities over words at a fixed dist_a from y."""

    lower: float
    upper: float


def likelihood_bounds(n: int, w_y: int, d: int, p: float) -> LikelihoodBounds:
    """Bounds on p(y|x) over all x with dist_a(x, y) = d, given only weight(y).

    The transition probability depends on x only through the number of matched
    zeros, which is largest (smallest) at the lower (upper) bound.
    """
    if not 0 <= w_y <= n:
        raise ValueError(f"weight {w_y} outside 0..{n}")
    if not 0 <= d <= n:
        raise ValueError(f"distance {d} outside 0..{n}")
    if not 0.0 < p < 2.0 / 3.0:
        raise ValueError(f"error probability {p} outside (0, 2/3)")
    half = p / 2.0
    if d < w_y:
        lower = half**d * (1.0 - half) ** (w_y - d) * (1.0 - p) ** (n - w_y)
    else:
        lower = half**d * (1.0 - p) ** (n - d)
    if d < n - w_y:
        upper = half**d * (1.0 - half) ** w_y * (1.0 - p) ** (n - w_y - d)
    else:
        upper = half**d * (1.0 - half) ** (n - d)
    return LikelihoodBounds(lower, upper)
