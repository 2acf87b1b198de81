"""Code containers and seeded constructions: random, random linear, greedy.

Random sampling is backed by the Philox counter-based generator from
numpy so that a seed fully determines the sampled code, independent of
platform and call history.  Tests pin content digests of sampled codes.
"""

from __future__ import annotations

import hashlib
import itertools
import math
from dataclasses import dataclass

import numpy as np

from .core import (
    CapacityError,
    DomainError,
    Word,
    format_word,
    insdel_distance,
    iter_words,
)

Seed = int

_GREEDY_SPACE_LIMIT = 200_000
_LINEAR_SPAN_LIMIT = 10 ** 6


@dataclass(frozen=True)
class Code:
    """Set of distinct equal-length words over {0, ..., q-1}."""

    q: int
    n: int
    words: frozenset[Word]

    def __post_init__(self) -> None:
        object.__setattr__(self, "words", frozenset(self.words))
        for w in self.words:
            if w.q != self.q:
                raise DomainError("codeword alphabet does not match the code")
            if len(w) != self.n:
                raise DomainError(f"codeword length {len(w)} differs from n={self.n}")

    def __len__(self) -> int:
        return len(self.words)

    def sorted_words(self) -> list[Word]:
        """Codewords in lexicographic order (the canonical listing)."""
        return sorted(self.words, key=lambda w: w.symbols)


@dataclass(frozen=True)
class LinearCode(Code):
    """Span of independent generators over a prime field, stored explicitly."""

    generators: tuple[Word, ...]


@dataclass(frozen=True)
class CodeStats:
    size: int
    rate: float
    min_distance: int
    relative_distance: float


def philox_generator(seed: Seed) -> np.random.Generator:
    """numpy Generator over the Philox4x64 counter-based bit stream.

    The seed is used directly as the Philox key, so equal seeds give
    equal streams regardless of what was sampled before.
    """
    if not 0 <= seed < 2 ** 128:
        raise DomainError("seed must be a nonnegative integer below 2**128")
    return np.random.Generator(np.random.Philox(key=seed))


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def sample_word_sequence(q: int, n: int, size: int, seed: Seed) -> list[Word]:
    """Sample `size` distinct uniform words of length n, in draw order.

    Duplicates are rejected and redrawn, so the result is a uniformly
    random ordered sample without replacement.  Deterministic per seed.
    """
    if q < 2 or n < 0 or size < 0:
        raise DomainError("need q >= 2, n >= 0, size >= 0")
    if size > q ** n:
        raise CapacityError(f"cannot pick {size} distinct words from q^n = {q ** n}")
    rng = philox_generator(seed)
    seen: set[tuple[int, ...]] = set()
    out: list[Word] = []
    while len(out) < size:
        syms = tuple(int(v) for v in rng.integers(0, q, size=n))
        if syms not in seen:
            seen.add(syms)
            out.append(Word(syms, q))
    return out


def sample_random_code(q: int, n: int, size: int, seed: Seed) -> Code:
    """Uniformly sampled code of `size` distinct words; deterministic per seed."""
    return Code(q, n, frozenset(sample_word_sequence(q, n, size, seed)))


def _rank_mod_p(rows: list[list[int]], p: int) -> int:
    # Gaussian elimination over F_p; rows is modified in place.
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col] % p), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][col], -1, p)
        rows[rank] = [(v * inv) % p for v in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                factor = rows[r][col]
                rows[r] = [(a - factor * b) % p for a, b in zip(rows[r], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank


def sample_random_linear_code(q: int, n: int, k: int, seed: Seed) -> LinearCode:
    """Sample k independent generators over F_q and return their span.

    Generator matrices are redrawn whole until the rank is k.  Restricted
    to prime q: linearity needs field structure and nothing in this
    package requires extension fields.
    """
    if not _is_prime(q):
        raise DomainError(f"linear codes need a prime alphabet size, got {q}")
    if not 0 <= k <= n:
        raise DomainError(f"dimension k={k} must lie in [0, n={n}]")
    if q ** k > _LINEAR_SPAN_LIMIT:
        raise CapacityError(f"span size q^k = {q ** k} exceeds limit {_LINEAR_SPAN_LIMIT}")
    rng = philox_generator(seed)
    while True:
        matrix = [[int(v) for v in rng.integers(0, q, size=n)] for _ in range(k)]
        if k == 0 or _rank_mod_p([row[:] for row in matrix], q) == k:
            break
    span: set[Word] = set()
    for coeffs in itertools.product(range(q), repeat=k):
        syms = [0] * n
        for c, row in zip(coeffs, matrix):
            if c:
                syms = [(s + c * v) % q for s, v in zip(syms, row)]
        span.add(Word(tuple(syms), q))
    generators = tuple(Word(tuple(row), q) for row in matrix)
    return LinearCode(q=q, n=n, words=frozenset(span), generators=generators)


def greedy_gv_code(q: int, n: int, d: int) -> Code:
    """Greedy code construction seeded with all q repetition words.

    Scans Sigma_q^n in lexicographic order and admits every word at
    insdel distance >= d from all current members.  The repetition words
    are pairwise at distance 2n, so they are always a valid seed set.
    """
    if n < 1:
        raise DomainError("greedy construction needs n >= 1")
    if not 0 < d <= 2 * n:
        raise DomainError(f"need 0 < d <= 2n, got d={d}, n={n}")
    if q ** n > _GREEDY_SPACE_LIMIT:
        raise CapacityError(f"q^n = {q ** n} exceeds greedy scan limit {_GREEDY_SPACE_LIMIT}")
    members = [Word((a,) * n, q) for a in range(q)]
    member_set = set(members)
    for cand in iter_words(q, n):
        if cand in member_set:
            continue
        if all(insdel_distance(cand, m) >= d for m in members):
            members.append(cand)
            member_set.add(cand)
    return Code(q, n, frozenset(member_set))


def code_stats(c: Code) -> CodeStats:
    """Rate, minimum insdel distance, and relative distance d/(2n)."""
    size = len(c.words)
    if size < 2:
        raise DomainError("minimum distance is undefined for codes with fewer than 2 words")
    if c.n < 1:
        raise DomainError("rate is undefined for n = 0")
    rate = math.log(size) / (c.n * math.log(c.q))
    listing = c.sorted_words()
    min_distance = min(
        insdel_distance(a, b) for a, b in itertools.combinations(listing, 2)
    )
    return CodeStats(
        size=size,
        rate=rate,
        min_distance=min_distance,
        relative_distance=min_distance / (2 * c.n),
    )


def code_digest(c: Code) -> str:
    """Stable content hash of a code (sha256 over the canonical listing)."""
    payload = "\n".join(
        [f"q={c.q}", f"n={c.n}"] + [format_word(w) for w in c.sorted_words()]
    )
    return hashlib.sha256(payload.encode("ascii")).hexdigest()


def code_to_json_dict(c: Code) -> dict:
    """JSON-ready form {q, n, words:[...]} using the shared word syntax."""
    return {"q": c.q, "n": c.n, "words": [format_word(w) for w in c.sorted_words()]}
