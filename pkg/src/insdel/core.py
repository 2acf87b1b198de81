"""Words over integer alphabets and the insertion-deletion metric.

The distance used throughout this package is the minimum number of
single-symbol insertions and deletions that turn one word into another.
It is computed from the longest common subsequence:

    dist(a, b) = len(a) + len(b) - 2 * lcs(a, b)

Deletion neighborhoods of a word are governed by its run-length
structure, so the run decomposition helpers live here too.  A word is
decomposed around its nonzero symbols: ``w`` counts them, and ``t``
counts the empty gaps between consecutive nonzeros (including the gaps
before the first and after the last nonzero, and capped at ``w`` so the
bounds below stay meaningful for words with no zero symbol at all).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator


class InsdelError(Exception):
    """Base class for every error raised by this package."""


class AlphabetMismatchError(InsdelError):
    """Words over different alphabets were combined."""


class DomainError(InsdelError, ValueError):
    """A numeric argument lies outside the documented domain."""


class OutOfRegimeError(DomainError):
    """Arguments are individually valid but outside a formula's regime."""


class CapacityError(InsdelError):
    """An exhaustive operation would exceed its documented size limit."""


class ScriptError(DomainError):
    """An edit script does not apply to the word it was given."""


class RegimeWarning(UserWarning):
    """A formula was evaluated outside its guaranteed parameter regime."""


@dataclass(frozen=True)
class Word:
    """Immutable word over the alphabet {0, ..., q-1}.

    The alphabet is identified by its size ``q``.  Symbols are stored as
    a tuple of ints; the empty word is valid.
    """

    symbols: tuple[int, ...]
    q: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "symbols", tuple(int(s) for s in self.symbols))
        if self.q < 2:
            raise DomainError(f"alphabet size must be at least 2, got {self.q}")
        for s in self.symbols:
            if not 0 <= s < self.q:
                raise DomainError(f"symbol {s} outside alphabet of size {self.q}")

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[int]:
        return iter(self.symbols)

    def __getitem__(self, item):
        if isinstance(item, slice):
            return Word(self.symbols[item], self.q)
        return self.symbols[item]

    def __str__(self) -> str:
        return format_word(self)


@dataclass(frozen=True)
class RunProfile:
    """Nonzero count ``w``, empty-gap count ``t``, and run count ``phi``."""

    w: int
    t: int
    phi: int


def word(symbols: Iterable[int], q: int) -> Word:
    """Convenience constructor accepting any iterable of symbols."""
    return Word(tuple(symbols), q)


def format_word(w: Word) -> str:
    """Serialize a word: digit string for q <= 10, comma-separated ints above."""
    if w.q <= 10:
        return "".join(str(s) for s in w.symbols)
    return ",".join(str(s) for s in w.symbols)


def parse_word(text: str, q: int) -> Word:
    """Parse the serialization produced by :func:`format_word`.

    The empty string denotes the empty word for either alphabet size.
    Raises :class:`DomainError` on malformed input or out-of-range symbols.
    """
    text = text.strip()
    if not text:
        return Word((), q)
    try:
        if q <= 10:
            syms = tuple(int(ch) for ch in text)
        else:
            syms = tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise DomainError(f"cannot parse word {text!r} over alphabet {q}") from exc
    return Word(syms, q)


def iter_words(q: int, length: int) -> Iterator[Word]:
    """Iterate all q**length words of the given length in lexicographic order."""
    for syms in itertools.product(range(q), repeat=length):
        yield Word(syms, q)


def _require_same_alphabet(a: Word, b: Word) -> None:
    if a.q != b.q:
        raise AlphabetMismatchError(f"alphabet sizes differ: {a.q} vs {b.q}")


def _lcs_length(xs: tuple[int, ...], ys: tuple[int, ...]) -> int:
    # Two-row dynamic program, O(len(xs) * len(ys)) time, O(min) space.
    if len(xs) < len(ys):
        xs, ys = ys, xs
    if not ys:
        return 0
    row = [0] * (len(ys) + 1)
    for x in xs:
        diag = 0
        for j, y in enumerate(ys, start=1):
            above = row[j]
            row[j] = diag + 1 if x == y else max(above, row[j - 1])
            diag = above
    return row[-1]


def lcs_length(a: Word, b: Word) -> int:
    """Length of the longest common subsequence of two words.

    Both words must live over the same alphabet.  The empty word has an
    LCS of 0 with everything.
    """
    _require_same_alphabet(a, b)
    return _lcs_length(a.symbols, b.symbols)


def insdel_distance(a: Word, b: Word) -> int:
    """Minimum number of insertions plus deletions turning ``a`` into ``b``.

    Equals ``len(a) + len(b) - 2 * lcs_length(a, b)``.  This is a metric;
    for words of equal length it is always even, and in general it is
    bounded between ``abs(len(a) - len(b))`` and ``len(a) + len(b)``.
    """
    _require_same_alphabet(a, b)
    return len(a) + len(b) - 2 * _lcs_length(a.symbols, b.symbols)


def count_runs(w: Word) -> int:
    """Number of maximal runs of equal symbols; 0 for the empty word."""
    return sum(1 for _ in itertools.groupby(w.symbols))


def run_profile(w: Word) -> RunProfile:
    """Compute the run profile (w, t, phi) of a word.

    ``w`` is the number of nonzero symbols.  Writing the word as
    zero blocks interleaved with its nonzero symbols,

        (0,)*a1, x1, (0,)*a2, x2, ..., xw, (0,)*a_{w+1}

    ``t`` counts the gap lengths ``a_i`` equal to zero, capped at ``w``
    (an all-nonzero word has w+1 empty gaps but t is reported as w, which
    keeps the run-count bounds valid).  ``phi`` is the run count.
    """
    nonzero_positions = [i for i, s in enumerate(w.symbols) if s != 0]
    weight = len(nonzero_positions)
    if weight == 0:
        t = 0
    else:
        gaps = []
        prev = -1
        for i in nonzero_positions:
            gaps.append(i - prev - 1)
            prev = i
        gaps.append(len(w) - 1 - prev)
        t = min(sum(1 for g in gaps if g == 0), weight)
    return RunProfile(w=weight, t=t, phi=count_runs(w))


def is_repetition(w: Word) -> bool:
    """True if all symbols are equal (the empty word counts as a repetition)."""
    return len(set(w.symbols)) <= 1


def hamming_weight(w: Word) -> int:
    """Number of nonzero symbols."""
    return sum(1 for s in w.symbols if s != 0)
