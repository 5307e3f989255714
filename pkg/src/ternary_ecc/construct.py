"""Building q-ary codes for the non-symmetric channel out of binary components.

An outer binary code fixes, per codeword, which positions carry non-zero
symbols; an inner code over the (q-1)-ary sub-alphabet picks the values on
those positions. Lifting the inner symbols away from zero makes codewords of
distinct outer words keep the outer Hamming distance, while codewords sharing
an outer word are separated by twice the inner Hamming distance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping, Sequence

from .core import (
    BinaryBlockCode,
    Code,
    Word,
    WeightEnumerator,
    hamming_weight,
    min_hamming_distance,
    weight_enumerator,
)

ErasureSymbol = int | None

InnerCode = BinaryBlockCode | Code


class PlanError(ValueError):
    """A construction plan violates a distance or coverage requirement."""


@dataclass(frozen=True)
class SupportMap:
    """Positions of the non-zero entries of a binary word, in increasing order.

    Positions are stored 0-based; one_based() matches hand calculations that
    number coordinates from 1.
    """

    word: Word
    positions: tuple[int, ...]

    @classmethod
    def of(cls, word: Word) -> "SupportMap":
        if word.q != 2:
            raise ValueError("support maps are defined for binary words")
        return cls(word, tuple(i for i, s in enumerate(word.symbols) if s))

    def one_based(self) -> tuple[int, ...]:
        return tuple(i + 1 for i in self.positions)

    def __len__(self) -> int:
        return len(self.positions)


def scatter_into_support(mask: Word, payload: Word) -> Word:
    """Place the payload symbols on the support of the binary mask, zeros elsewhere."""
    support = SupportMap.of(mask)
    if len(payload) != len(support):
        raise ValueError(
            f"payload length {len(payload)} differs from mask weight {len(support)}"
        )
    symbols = [0] * len(mask)
    for pos, value in zip(support.positions, payload.symbols):
        symbols[pos] = value
    return Word(payload.q, tuple(symbols))


def gather_from_support(mask: Word, word: Word) -> Word:
    """Inverse of scatter_into_support: read the symbols on the mask's support."""
    support = SupportMap.of(mask)
    if len(word) != len(mask):
        raise ValueError(f"word length {len(word)} differs from mask length {len(mask)}")
    return Word(word.q, tuple(word.symbols[pos] for pos in support.positions))


def lift_erasure_word(symbols: Sequence[ErasureSymbol], q: int) -> Word:
    """Map symbols of the (q-1)-ary alphabet (plus erasures) into the q-ary one.

    Every symbol moves up by one so the image avoids zero; erasures (None)
    become zero.
    """
    if q < 3:
        raise ValueError(f"target alphabet must be at least 3, got {q}")
    lifted = []
    for s in symbols:
        if s is None:
            lifted.append(0)
        elif 0 <= s <= q - 2:
            lifted.append(s + 1)
        else:
            raise ValueError(f"symbol {s} outside sub-alphabet of size {q - 1}")
    return Word(q, tuple(lifted))


def lower_to_erasure_word(word: Word) -> tuple[ErasureSymbol, ...]:
    """Inverse of lift_erasure_word: zero becomes an erasure, s becomes s - 1."""
    return tuple(None if s == 0 else s - 1 for s in word.symbols)


def parse_erasure_text(text: str) -> tuple[ErasureSymbol, ...]:
    """Parse a string like '11010?1?' where '?' marks an erasure."""
    return tuple(None if ch == "?" else int(ch) for ch in text)


def format_erasure_text(symbols: Sequence[ErasureSymbol]) -> str:
    return "".join("?" if s is None else str(s) for s in symbols)


def _inner_words(inner: InnerCode) -> frozenset[Word]:
    return inner.words


def _inner_alphabet(inner: InnerCode) -> int:
    return 2 if isinstance(inner, BinaryBlockCode) else inner.q


def _inner_length(inner: InnerCode) -> int:
    return inner.n


@dataclass(frozen=True)
class ConstructionPlan:
    """Outer binary code plus one inner code per outer codeword weight.

    The outer code needs minimum Hamming distance >= dbmin and every inner
    code needs minimum Hamming distance >= ceil(dbmin / 2); validate() checks
    both by direct computation rather than trusting labels. Weight 0 is always
    covered by the singleton empty-word code.
    """

    outer: BinaryBlockCode
    inner: Mapping[int, InnerCode]
    dbmin: int
    q: int = 3

    def __post_init__(self) -> None:
        object.__setattr__(self, "inner", dict(self.inner))
        if self.q < 3:
            raise ValueError(f"target alphabet must be at least 3, got {self.q}")
        if self.dbmin < 1:
            raise ValueError(f"target minimum distance must be >= 1, got {self.dbmin}")

    @property
    def inner_min_distance(self) -> int:
        return math.ceil(self.dbmin / 2)

    def weight_enumerator(self) -> WeightEnumerator:
        return weight_enumerator(self.outer)

    def inner_for(self, weight: int) -> InnerCode:
        if weight in self.inner:
            return self.inner[weight]
        if weight == 0:
            return Code(self.q - 1, 0, frozenset({Word(self.q - 1, ())}))
        raise PlanError(f"no inner code for outer weight {weight}")

    def validate(self) -> None:
        if self.outer.size >= 2 and self.outer.min_distance() < self.dbmin:
            raise PlanError(
                f"outer minimum distance {self.outer.min_distance()} below {self.dbmin}"
            )
        needed = self.weight_enumerator().nonzero_weights()
        for d in needed:
            inner = self.inner_for(d)
            if _inner_length(inner) != d:
                raise PlanError(
                    f"inner code for weight {d} has length {_inner_length(inner)}"
                )
            if d > 0 and _inner_alphabet(inner) != self.q - 1:
                raise PlanError(
                    f"inner code for weight {d} uses alphabet "
                    f"{_inner_alphabet(inner)}, expected {self.q - 1}"
                )
            words = _inner_words(inner)
            if len(words) >= 2:
                dist = min_hamming_distance(words)
                if dist < self.inner_min_distance:
                    raise PlanError(
                        f"inner code for weight {d} has minimum distance {dist}, "
                        f"needs {self.inner_min_distance}"
                    )


def build_code(plan: ConstructionPlan) -> Code:
    """Materialize the plan: lift each inner codeword onto each outer support.

    Images of distinct outer codewords never intersect; a repeat would mean a
    broken plan, so it is checked outright.
    """
    plan.validate()
    n = plan.outer.n
    seen: set[Word] = set()
    for mask in plan.outer.sorted_words():
        inner = plan.inner_for(hamming_weight(mask))
        for inner_word in sorted(_inner_words(inner)):
            lifted = lift_erasure_word(inner_word.symbols, plan.q)
            codeword = scatter_into_support(mask, lifted)
            if codeword in seen:
                raise PlanError(f"construction produced {codeword} twice")
            seen.add(codeword)
    return Code(plan.q, n, frozenset(seen))


def construction_size(
    we: WeightEnumerator, inner_sizes: Mapping[int, int]
) -> int:
    """Size of the constructed code from the outer weight enumerator alone.

    Needs only the inner code sizes, one per weight with a non-zero count;
    weight 0 defaults to the singleton empty-word code.
    """
    total = 0
    for d, count in enumerate(we.counts):
        if count == 0:
            continue
        if d in inner_sizes:
            size = inner_sizes[d]
        elif d == 0:
            size = 1
        else:
            raise PlanError(f"no inner size for weight {d}")
        total += count * size
    return total
