"""Brute-force decoders over explicit codebooks and Monte Carlo error-rate runs."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

from .channel import ChannelSpec, split_seed, transmit
from .core import Code, Word
from .metric import INF, dist_a, dist_ml

DECODER_KINDS = ("da", "ml")


@dataclass(frozen=True)
class DecodeResult:
    """Outcome of a codebook scan: every minimizer, plus the tie-break winner.

    When every codeword sits at infinite distance the received word is
    unreachable from the whole codebook; chosen is None and minimizers empty.
    """

    chosen: Word | None
    minimizers: frozenset[Word]
    distance: float

    @property
    def undecodable(self) -> bool:
        return self.chosen is None


def _scan(code: Code, measure: Callable[[Word], float]) -> DecodeResult:
    best = INF
    minimizers: list[Word] = []
    for candidate in code.sorted_words():
        d = measure(candidate)
        if d == INF:
            continue
        if d < best:
            best = d
            minimizers = [candidate]
        elif d == best:
            minimizers.append(candidate)
    if not minimizers:
        return DecodeResult(None, frozenset(), INF)
    # sorted_words() order makes minimizers[0] the lexicographically smallest
    return DecodeResult(minimizers[0], frozenset(minimizers), best)


def decode_da(code: Code, received: Word) -> DecodeResult:
    """Decode by minimizing dist_a; ties go to the smallest codeword."""
    if received.q != code.q or len(received) != code.n:
        raise ValueError("received word does not match the code parameters")
    return _scan(code, lambda w: dist_a(w, received))


def decode_ml(code: Code, received: Word, p: float) -> DecodeResult:
    """Maximum-likelihood decoding via the negative log-likelihood distance."""
    if received.q != code.q or len(received) != code.n:
        raise ValueError("received word does not match the code parameters")
    return _scan(code, lambda w: dist_ml(w, received, p))


@dataclass(frozen=True)
class SimReport:
    """Counts from a Monte Carlo word-error run; correct + errors + undecodable = trials."""

    trials: int
    word_errors: int
    undecodable: int
    p: float
    decoder: str
    seed: int

    @property
    def correct(self) -> int:
        return self.trials - self.word_errors - self.undecodable

    @property
    def word_error_rate(self) -> float:
        return self.word_errors / self.trials


def simulate(
    code: Code,
    spec: ChannelSpec,
    decoder: str,
    trials: int,
    seed: int,
) -> SimReport:
    """Send uniform random codewords, decode, and count exact-word recoveries.

    Every trial derives its own child seed, so the totals do not depend on how
    trials might be split across workers.
    """
    if decoder not in DECODER_KINDS:
        raise ValueError(f"unknown decoder {decoder!r}, expected one of {DECODER_KINDS}")
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    if code.q != spec.q:
        raise ValueError("code and channel alphabets differ")
    words = code.sorted_words()
    errors = 0
    undecodable = 0
    for t in range(trials):
        rng = random.Random(split_seed(seed, t))
        sent = words[rng.randrange(len(words))]
        received = transmit(spec, sent, rng)
        if decoder == "da":
            result = decode_da(code, received)
        else:
            result = decode_ml(code, received, spec.p)
        if result.undecodable:
            undecodable += 1
        elif result.chosen != sent:
            errors += 1
    return SimReport(trials, errors, undecodable, spec.p, decoder, seed)
