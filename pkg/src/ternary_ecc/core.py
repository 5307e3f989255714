"""Words over small alphabets, code containers, and the plain-text code file format."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from pathlib import Path
from typing import Iterable, Iterator, Sequence, TextIO

# The text format writes one digit per symbol, so alphabets stop at 10.
MAX_TEXT_ALPHABET = 10


class CodeFormatError(ValueError):
    """A code file violates the on-disk format."""


class ErasureDecodeError(ValueError):
    """Erasure filling found no consistent codeword, or more than one."""


@dataclass(frozen=True)
class Word:
    """Immutable fixed-length word over the alphabet {0, ..., q-1}."""

    q: int
    symbols: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "symbols", tuple(self.symbols))
        if self.q < 2:
            raise ValueError(f"alphabet size must be at least 2, got {self.q}")
        for s in self.symbols:
            if not isinstance(s, int) or not 0 <= s < self.q:
                raise ValueError(f"symbol {s!r} outside alphabet of size {self.q}")

    @classmethod
    def from_string(cls, text: str, q: int) -> "Word":
        """Parse a contiguous digit string such as '20010'."""
        if q > MAX_TEXT_ALPHABET:
            raise ValueError(f"digit strings support q <= {MAX_TEXT_ALPHABET}, got {q}")
        try:
            symbols = tuple(int(ch) for ch in text)
        except ValueError as exc:
            raise ValueError(f"non-digit character in word {text!r}") from exc
        return cls(q, symbols)

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[int]:
        return iter(self.symbols)

    def __getitem__(self, index: int) -> int:
        return self.symbols[index]

    def __lt__(self, other: "Word") -> bool:
        return self.symbols < other.symbols

    def __str__(self) -> str:
        if self.q > MAX_TEXT_ALPHABET:
            raise ValueError(f"digit rendering supports q <= {MAX_TEXT_ALPHABET}")
        return "".join(str(s) for s in self.symbols)


def hamming_weight(word: Word) -> int:
    """Number of non-zero symbols."""
    return sum(1 for s in word.symbols if s != 0)


def hamming_distance(u: Word, v: Word) -> int:
    """Number of positions where the two words differ."""
    _check_compatible(u, v)
    return sum(1 for a, b in zip(u.symbols, v.symbols) if a != b)


def _check_compatible(u: Word, v: Word) -> None:
    if u.q != v.q:
        raise ValueError(f"alphabet mismatch: {u.q} vs {v.q}")
    if len(u) != len(v):
        raise ValueError(f"length mismatch: {len(u)} vs {len(v)}")


def all_words(q: int, n: int) -> Iterator[Word]:
    """All q-ary words of length n in lexicographic order."""
    for symbols in product(range(q), repeat=n):
        yield Word(q, symbols)


def min_hamming_distance(words: Iterable[Word]) -> int:
    """Minimum pairwise Hamming distance; requires at least two words."""
    ws = sorted(words)
    if len(ws) < 2:
        raise ValueError("minimum distance needs at least two words")
    best = len(ws[0])
    for i, u in enumerate(ws):
        for v in ws[i + 1 :]:
            d = hamming_distance(u, v)
            if d < best:
                best = d
                if best == 1:
                    return 1
    return best


@dataclass(frozen=True)
class Code:
    """Set of equal-length words over one alphabet."""

    q: int
    n: int
    words: frozenset[Word]
    _dbmin_cache: int | None = field(
        default=None, init=False, repr=False, compare=False
    )

    def __post_init__(self) -> None:
        object.__setattr__(self, "words", frozenset(self.words))
        if not self.words:
            raise ValueError("a code holds at least one word")
        for w in self.words:
            if w.q != self.q:
                raise ValueError(f"word alphabet {w.q} differs from code alphabet {self.q}")
            if len(w) != self.n:
                raise ValueError(f"word length {len(w)} differs from block length {self.n}")

    @classmethod
    def from_words(cls, words: Iterable[Word]) -> "Code":
        ws = list(words)
        if not ws:
            raise ValueError("a code holds at least one word")
        return cls(ws[0].q, len(ws[0]), frozenset(ws))

    @classmethod
    def from_strings(cls, q: int, texts: Iterable[str]) -> "Code":
        return cls.from_words(Word.from_string(t, q) for t in texts)

    @property
    def size(self) -> int:
        return len(self.words)

    def sorted_words(self) -> list[Word]:
        return sorted(self.words)


@dataclass(frozen=True)
class BinaryBlockCode:
    """Explicit binary codeword set, optionally backed by a generator matrix."""

    n: int
    words: frozenset[Word]
    generator: tuple[Word, ...] | None = None
    _min_dist_cache: int | None = field(
        default=None, init=False, repr=False, compare=False
    )

    def __post_init__(self) -> None:
        object.__setattr__(self, "words", frozenset(self.words))
        if not self.words:
            raise ValueError("a code holds at least one word")
        for w in self.words:
            if w.q != 2:
                raise ValueError("binary block codes hold binary words only")
            if len(w) != self.n:
                raise ValueError(f"word length {len(w)} differs from block length {self.n}")
        if self.generator is not None:
            rows = tuple(self.generator)
            object.__setattr__(self, "generator", rows)
            for row in rows:
                if row.q != 2 or len(row) != self.n:
                    raise ValueError("generator rows must be binary words of length n")
            span = _gf2_span(rows, self.n)
            if span != self.words:
                raise ValueError("generator rows do not span the given codeword set")
            if len(self.words) != 1 << _gf2_rank(rows):
                raise ValueError("codeword count inconsistent with generator rank")

    @classmethod
    def from_words(cls, words: Iterable[Word]) -> "BinaryBlockCode":
        ws = list(words)
        if not ws:
            raise ValueError("a code holds at least one word")
        return cls(len(ws[0]), frozenset(ws))

    @classmethod
    def from_strings(cls, texts: Iterable[str]) -> "BinaryBlockCode":
        return cls.from_words(Word.from_string(t, 2) for t in texts)

    @classmethod
    def from_generator(cls, rows: Sequence[Word | str]) -> "BinaryBlockCode":
        row_words = tuple(
            r if isinstance(r, Word) else Word.from_string(r, 2) for r in rows
        )
        if not row_words:
            raise ValueError("a generator needs at least one row")
        n = len(row_words[0])
        return cls(n, _gf2_span(row_words, n), row_words)

    @property
    def size(self) -> int:
        return len(self.words)

    @property
    def info_len(self) -> int | None:
        """log2 of the code size when that is an integer, else None."""
        m = len(self.words)
        k = m.bit_length() - 1
        return k if 1 << k == m else None

    def sorted_words(self) -> list[Word]:
        return sorted(self.words)

    def min_distance(self) -> int:
        """Minimum pairwise Hamming distance (size >= 2 required)."""
        if self._min_dist_cache is None:
            object.__setattr__(
                self, "_min_dist_cache", min_hamming_distance(self.words)
            )
        return self._min_dist_cache

    def nearest(self, received: Word) -> Word:
        """Closest codeword in Hamming distance; ties go to the smallest word."""
        if received.q != 2 or len(received) != self.n:
            raise ValueError("received word must be binary of matching length")
        best_word = None
        best = self.n + 1
        for w in self.sorted_words():
            d = hamming_distance(w, received)
            if d < best:
                best, best_word = d, w
        return best_word

    def erasure_decode(self, pattern: Sequence[int | None]) -> Word:
        """Unique codeword agreeing with every non-erased position of the pattern.

        Erased positions are None. Raises ErasureDecodeError when no codeword
        or more than one codeword is consistent.
        """
        if len(pattern) != self.n:
            raise ValueError(f"pattern length {len(pattern)} differs from block length {self.n}")
        matches = [
            w
            for w in self.sorted_words()
            if all(p is None or p == s for p, s in zip(pattern, w.symbols))
        ]
        if not matches:
            raise ErasureDecodeError("no codeword consistent with the unerased positions")
        if len(matches) > 1:
            raise ErasureDecodeError(
                f"{len(matches)} codewords consistent with the unerased positions"
            )
        return matches[0]

    def to_code(self) -> Code:
        return Code(2, self.n, self.words)


def _row_to_int(row: Word) -> int:
    value = 0
    for i, s in enumerate(row.symbols):
        if s:
            value |= 1 << i
    return value


def _gf2_rank(rows: Sequence[Word]) -> int:
    basis: list[int] = []
    for row in rows:
        v = _row_to_int(row)
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis.append(v)
            basis.sort(reverse=True)
    return len(basis)


def _gf2_span(rows: Sequence[Word], n: int) -> frozenset[Word]:
    span = {Word(2, (0,) * n)}
    for row in rows:
        span |= {
            Word(2, tuple(a ^ b for a, b in zip(w.symbols, row.symbols))) for w in span
        }
    return frozenset(span)


@dataclass(frozen=True)
class WeightEnumerator:
    """Counts of codewords per Hamming weight, indexed 0..n."""

    n: int
    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "counts", tuple(self.counts))
        if len(self.counts) != self.n + 1:
            raise ValueError(f"expected {self.n + 1} counts, got {len(self.counts)}")
        if any(c < 0 for c in self.counts):
            raise ValueError("weight counts must be non-negative")

    @property
    def total(self) -> int:
        return sum(self.counts)

    def nonzero_weights(self) -> list[int]:
        return [d for d, c in enumerate(self.counts) if c]


def weight_enumerator(code: BinaryBlockCode) -> WeightEnumerator:
    """Count codewords of each Hamming weight."""
    counts = [0] * (code.n + 1)
    for w in code.words:
        counts[hamming_weight(w)] += 1
    return WeightEnumerator(code.n, tuple(counts))


def save_code(code: Code, target: str | Path | TextIO) -> None:
    """Write a code in the text format: a 'q n M' header, then one word per line."""
    if code.q > MAX_TEXT_ALPHABET:
        raise ValueError(f"text format supports q <= {MAX_TEXT_ALPHABET}")
    lines = [f"{code.q} {code.n} {code.size}"]
    lines.extend(str(w) for w in code.sorted_words())
    text = "\n".join(lines) + "\n"
    if isinstance(target, (str, Path)):
        Path(target).write_text(text, encoding="ascii")
    else:
        target.write(text)


def load_code(source: str | Path | TextIO) -> Code:
    """Read a code from the text format; malformed input raises CodeFormatError."""
    if isinstance(source, (str, Path)):
        text = Path(source).read_text(encoding="ascii")
    else:
        text = source.read()
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise CodeFormatError("empty code file")
    header = lines[0].split(" ")
    if len(header) != 3:
        raise CodeFormatError(f"malformed header {lines[0]!r}, expected 'q n M'")
    try:
        q, n, m = (int(part) for part in header)
    except ValueError as exc:
        raise CodeFormatError(f"malformed header {lines[0]!r}") from exc
    if not 2 <= q <= MAX_TEXT_ALPHABET:
        raise CodeFormatError(f"alphabet size {q} outside 2..{MAX_TEXT_ALPHABET}")
    if n < 0 or m < 1:
        raise CodeFormatError(f"invalid dimensions n={n}, M={m}")
    body = lines[1:]
    if len(body) != m:
        raise CodeFormatError(f"header promises {m} words, file holds {len(body)}")
    words: set[Word] = set()
    for lineno, line in enumerate(body, start=2):
        if len(line) != n:
            raise CodeFormatError(f"line {lineno}: expected {n} symbols, got {len(line)}")
        try:
            word = Word.from_string(line, q)
        except ValueError as exc:
            raise CodeFormatError(f"line {lineno}: {exc}") from exc
        if word in words:
            raise CodeFormatError(f"line {lineno}: duplicate codeword {line!r}")
        words.add(word)
    return Code(q, n, frozenset(words))
