"""Variable-length to fixed-length streaming over a ternary construction plan.

Each block spends k bits choosing an outer codeword and, depending on that
codeword's weight, k_w more bits choosing an inner codeword; the pair turns
into one ternary word. Decoding inverts the two choices: a binary projection
plus nearest-codeword decode recovers the outer word, after which the surviving
non-zero positions erasure-decode the inner word.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import BinaryBlockCode, ErasureDecodeError, Word, hamming_weight
from .construct import (
    ConstructionPlan,
    gather_from_support,
    lift_erasure_word,
    lower_to_erasure_word,
    scatter_into_support,
)

Bits = tuple[int, ...]


class CodecError(ValueError):
    """The plan cannot carry a bit stream (sizes not powers of two, wrong alphabet)."""


class BlockDecodeError(ValueError):
    """A block failed to decode; carries the block index within the stream."""

    def __init__(self, message: str, block_index: int | None = None):
        super().__init__(message)
        self.block_index = block_index


class MessageStream:
    """A finite bit buffer read as if it were endless, via the padding rule.

    When reads outrun the real bits, the stream appends a single 1 and then
    zeros forever; drained means every real bit and the padding 1 are consumed.
    """

    def __init__(self, bits: Iterable[int]):
        self._bits = tuple(int(b) for b in bits)
        if any(b not in (0, 1) for b in self._bits):
            raise ValueError("message bits must be 0 or 1")
        self._pos = 0
        self._pad_started = False

    @property
    def consumed(self) -> int:
        """Number of real message bits read so far."""
        return min(self._pos, len(self._bits))

    @property
    def drained(self) -> bool:
        return self._pos >= len(self._bits) and self._pad_started

    def read(self, k: int) -> Bits:
        out = []
        for _ in range(k):
            if self._pos < len(self._bits):
                out.append(self._bits[self._pos])
            elif not self._pad_started:
                self._pad_started = True
                out.append(1)
            else:
                out.append(0)
            self._pos += 1
        return tuple(out)


def strip_padding(bits: Sequence[int]) -> Bits:
    """Drop trailing zeros and the stop bit 1 that the padding rule appended."""
    out = list(bits)
    while out and out[-1] == 0:
        out.pop()
    if not out or out[-1] != 1:
        raise ValueError("no padding marker found; stream is corrupt or truncated")
    out.pop()
    return tuple(out)


@dataclass(frozen=True)
class BlockTrace:
    """Everything one encoded block consumed and produced."""

    u1: Bits
    x1_bar: Word
    u2: Bits
    x2_bar: Word
    x: Word


@dataclass(frozen=True)
class DecodeTrace:
    """Intermediate values of a block decode, for diagnostics and verification."""

    y1_bar: Word
    x1_hat: Word
    u1_hat: Bits
    y2_bar: tuple[int | None, ...]
    x2_hat: Word
    u2_hat: Bits
    x_hat: Word


class _MessageMap:
    """Bijection between fixed-length bit blocks and the codewords of a code.

    Linear codes with a full set of independent generator rows map message
    bits through the rows; other codes enumerate sorted codewords, indexing
    them with big-endian bit blocks.
    """

    def __init__(self, code: BinaryBlockCode):
        k = code.info_len
        if k is None:
            raise CodecError(
                f"code of size {code.size} has no power-of-two message space"
            )
        self.code = code
        self.k = k
        if code.generator is not None and len(code.generator) != k:
            raise CodecError("generator rows are dependent; message map is ambiguous")
        if code.generator is not None:
            self._encode_table = [
                self._combine(code.generator, index) for index in range(1 << k)
            ]
        else:
            self._encode_table = code.sorted_words()
        self._decode_table = {w: i for i, w in enumerate(self._encode_table)}

    @staticmethod
    def _combine(rows: Sequence[Word], index: int) -> Word:
        n = len(rows[0])
        acc = [0] * n
        k = len(rows)
        for j, row in enumerate(rows):
            if (index >> (k - 1 - j)) & 1:
                acc = [a ^ b for a, b in zip(acc, row.symbols)]
        return Word(2, tuple(acc))

    def encode(self, bits: Bits) -> Word:
        if len(bits) != self.k:
            raise ValueError(f"expected {self.k} message bits, got {len(bits)}")
        return self._encode_table[_bits_to_int(bits)]

    def decode(self, word: Word) -> Bits:
        return _int_to_bits(self._decode_table[word], self.k)


def _bits_to_int(bits: Bits) -> int:
    value = 0
    for b in bits:
        value = (value << 1) | b
    return value


def _int_to_bits(value: int, k: int) -> Bits:
    return tuple((value >> (k - 1 - j)) & 1 for j in range(k))


class StreamCodec:
    """Encoder/decoder pair for one validated ternary construction plan."""

    def __init__(self, plan: ConstructionPlan):
        if plan.q != 3:
            raise CodecError("streaming is defined for the ternary channel only")
        plan.validate()
        self.plan = plan
        self._outer = _MessageMap(self._as_binary(plan.outer))
        self._inner: dict[int, _MessageMap] = {}
        for d in plan.weight_enumerator().nonzero_weights():
            self._inner[d] = _MessageMap(self._as_binary(plan.inner_for(d)))
        if self._outer.k == 0 and all(m.k == 0 for m in self._inner.values()):
            raise CodecError("plan carries no information; every block is fixed")

    @staticmethod
    def _as_binary(code) -> BinaryBlockCode:
        if isinstance(code, BinaryBlockCode):
            return code
        if code.q == 2:
            return BinaryBlockCode(code.n, code.words)
        raise CodecError("inner codes must be binary for streaming")

    @property
    def outer_message_len(self) -> int:
        return self._outer.k

    def inner_message_len(self, weight: int) -> int:
        return self._inner[weight].k

    def outer_codeword(self, bits: Bits) -> Word:
        return self._outer.encode(bits)

    def inner_codeword(self, weight: int, bits: Bits) -> Word:
        return self._inner[weight].encode(bits)

    def encode_block(self, stream: MessageStream) -> BlockTrace:
        u1 = stream.read(self._outer.k)
        x1 = self._outer.encode(u1)
        inner = self._inner[hamming_weight(x1)]
        u2 = stream.read(inner.k)
        x2 = inner.encode(u2)
        x = scatter_into_support(x1, lift_erasure_word(x2.symbols, 3))
        return BlockTrace(u1, x1, u2, x2, x)

    def decode_block_trace(self, received: Word) -> DecodeTrace:
        if received.q != 3 or len(received) != self.plan.outer.n:
            raise ValueError("received word does not match the plan parameters")
        y1 = Word(2, tuple(1 if s else 0 for s in received.symbols))
        x1_hat = self._outer.code.nearest(y1)
        u1_hat = self._outer.decode(x1_hat)
        weight = hamming_weight(x1_hat)
        inner = self._inner.get(weight)
        if inner is None:
            raise BlockDecodeError(
                f"outer decode landed on weight {weight}, which no inner code covers"
            )
        # keep received symbols on the support of the outer estimate, then undo the lift
        masked = Word(
            3, tuple(s if m else 0 for s, m in zip(received.symbols, x1_hat.symbols))
        )
        y2 = lower_to_erasure_word(gather_from_support(x1_hat, masked))
        x2_hat = inner.code.erasure_decode(y2)
        u2_hat = inner.decode(x2_hat)
        x_hat = scatter_into_support(x1_hat, lift_erasure_word(x2_hat.symbols, 3))
        return DecodeTrace(y1, x1_hat, u1_hat, y2, x2_hat, u2_hat, x_hat)

    def decode_block(self, received: Word) -> tuple[Bits, Bits]:
        trace = self.decode_block_trace(received)
        return trace.u1_hat, trace.u2_hat

    def encode_stream(self, bits: Iterable[int]) -> list[Word]:
        stream = MessageStream(bits)
        blocks: list[Word] = []
        while not stream.drained:
            blocks.append(self.encode_block(stream).x)
        return blocks

    def decode_stream(self, words: Iterable[Word]) -> Bits:
        out: list[int] = []
        for index, received in enumerate(words):
            try:
                u1, u2 = self.decode_block(received)
            except (ErasureDecodeError, BlockDecodeError) as exc:
                raise BlockDecodeError(f"block {index}: {exc}", index) from exc
            out.extend(u1)
            out.extend(u2)
        return tuple(out)


def encode_block(plan: ConstructionPlan, stream: MessageStream) -> BlockTrace:
    return StreamCodec(plan).encode_block(stream)


def decode_block(plan: ConstructionPlan, received: Word) -> tuple[Bits, Bits]:
    return StreamCodec(plan).decode_block(received)


def encode_stream(plan: ConstructionPlan, bits: Iterable[int]) -> list[Word]:
    return StreamCodec(plan).encode_stream(bits)


def decode_stream(plan: ConstructionPlan, words: Iterable[Word]) -> Bits:
    return StreamCodec(plan).decode_stream(words)
