"""Brute-force list decoding, certification, and the outer code.

Everything here is exact and enumeration-based.  The outer code is a
plain Reed-Solomon evaluation code over a prime field with brute-force
list recovery; that stands in, interface-compatibly, for the fast
list-recoverable codes the concatenated construction assumes, whose
algebraic decoding internals are out of scope at desk scale.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .bounds import large_q_list_size, random_rate_binary, random_rate_q3
from .codes import Code, Seed, philox_generator, sample_random_code
from .core import CapacityError, DomainError, Word, format_word, insdel_distance

_CERTIFY_CENTER_LIMIT = 10 ** 7
_RECOVER_SPAN_LIMIT = 10 ** 6

PositionLists = Sequence[frozenset[int]]


@dataclass(frozen=True)
class DecodeResult:
    """Codewords within the queried radius, in lexicographic order."""

    candidates: tuple[Word, ...]
    radius: int


class CertifyResult(NamedTuple):
    ok: bool
    witness: Word | None


@dataclass(frozen=True)
class RSCode:
    """Reed-Solomon evaluation code over F_p: p prime, K <= N <= p."""

    p: int
    k: int
    points: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "points", tuple(int(x) for x in self.points))
        if self.p < 2 or any(self.p % f == 0 for f in range(2, int(math.isqrt(self.p)) + 1)):
            raise DomainError(f"field order {self.p} is not prime")
        if len(set(self.points)) != len(self.points):
            raise DomainError("evaluation points must be distinct")
        if any(not 0 <= x < self.p for x in self.points):
            raise DomainError("evaluation points must lie in the field")
        if not 1 <= self.k <= len(self.points) <= self.p:
            raise DomainError(
                f"need 1 <= K <= N <= p, got K={self.k}, N={len(self.points)}, p={self.p}"
            )

    @property
    def n(self) -> int:
        return len(self.points)


def brute_force_list_decode(c: Code, r: Word, radius: int) -> DecodeResult:
    """All codewords within the radius of r, sorted lexicographically."""
    if radius < 0:
        raise DomainError("radius must be nonnegative")
    hits = [w for w in c.sorted_words() if insdel_distance(w, r) <= radius]
    return DecodeResult(candidates=tuple(hits), radius=radius)


def _admissible_lengths(n: int, tau_n: int) -> range:
    return range(max(0, n - tau_n), n + tau_n + 1)


def certify_list_decodable(
    c: Code,
    tau_n: int,
    L: int,
    mode: str = "exhaustive",
    samples: int = 1000,
    seed: Seed | None = None,
) -> CertifyResult:
    """Check that every radius-tau_n ball holds at most L codewords.

    Exhaustive mode scans every center of every admissible length
    m in [max(0, n - tau_n), n + tau_n] in length-then-lexicographic
    order, so a returned witness is the first violation in that order.
    Sampled mode draws centers with lengths weighted by q**m (matching
    the enumeration space) and requires a seed.
    """
    if tau_n < 0 or L < 1:
        raise DomainError("need tau_n >= 0 and L >= 1")
    q, n = c.q, c.n
    lengths = _admissible_lengths(n, tau_n)

    def violates(center: Word) -> bool:
        hits = 0
        for w in c.words:
            if insdel_distance(w, center) <= tau_n:
                hits += 1
                if hits > L:
                    return True
        return False

    if mode == "exhaustive":
        total = sum(q ** m for m in lengths)
        if total > _CERTIFY_CENTER_LIMIT:
            raise CapacityError(
                f"{total} centers exceed the exhaustive limit {_CERTIFY_CENTER_LIMIT}; "
                "use mode='sampled'"
            )
        for m in lengths:
            for syms in itertools.product(range(q), repeat=m):
                center = Word(syms, q)
                if violates(center):
                    return CertifyResult(ok=False, witness=center)
        return CertifyResult(ok=True, witness=None)

    if mode != "sampled":
        raise DomainError(f"unknown mode {mode!r}; use 'exhaustive' or 'sampled'")
    if seed is None:
        raise DomainError("sampled mode requires a seed")
    if samples < 1:
        raise DomainError("need at least one sample")
    rng = philox_generator(seed)
    weights = [q ** m for m in lengths]
    total = sum(weights)
    for _ in range(samples):
        ticket = int(rng.integers(0, total))
        m = lengths[0]
        for length, weight in zip(lengths, weights):
            if ticket < weight:
                m = length
                break
            ticket -= weight
        center = Word(tuple(int(v) for v in rng.integers(0, q, size=m)), q)
        if violates(center):
            return CertifyResult(ok=False, witness=center)
    return CertifyResult(ok=True, witness=None)


def monte_carlo_rate_experiment(
    q: int,
    n: int,
    gamma: float,
    kappa: float,
    epsilon: float,
    trials: int,
    seed: Seed,
    samples: int = 200,
) -> dict:
    """Sampled certification of random codes at the formula rate.

    Qualitative by design: the underlying statement is asymptotic, so
    the report records the failure fraction without asserting any
    threshold.  Codes are drawn at rate from the matching fixed-split
    formula, the radius is floor((gamma+kappa)*n), and the list size is
    the ceil((1+tau)/epsilon) - 1 rule.
    """
    if trials < 1:
        raise DomainError("need at least one trial")
    if epsilon <= 0:
        raise DomainError("epsilon must be positive for the list-size rule")
    point = (
        random_rate_binary(gamma, kappa, epsilon)
        if q == 2
        else random_rate_q3(q, gamma, kappa, epsilon)
    )
    tau = gamma + kappa
    radius = math.floor(tau * n)
    L = large_q_list_size(tau, epsilon)
    size = max(1, min(q ** n, math.floor(q ** (point.rate * n))))
    master = philox_generator(seed)
    failures = 0
    witnesses: list[str] = []
    for _ in range(trials):
        code_seed = int(master.integers(0, 2 ** 63))
        certify_seed = int(master.integers(0, 2 ** 63))
        code = sample_random_code(q, n, size, code_seed)
        result = certify_list_decodable(
            code, radius, L, mode="sampled", samples=samples, seed=certify_seed
        )
        if not result.ok:
            failures += 1
            witnesses.append(format_word(result.witness))
    return {
        "params": {
            "q": q,
            "n": n,
            "gamma": gamma,
            "kappa": kappa,
            "epsilon": epsilon,
            "rate": point.rate,
            "code_size": size,
            "radius": radius,
            "list_size": L,
            "samples_per_trial": samples,
        },
        "trials": trials,
        "failures": failures,
        "failure_fraction": failures / trials,
        "witnesses": witnesses,
        "seed": seed,
    }


def rs_encode(code: RSCode, message: Sequence[int]) -> tuple[int, ...]:
    """Evaluate the degree-<K message polynomial at the code's points."""
    if len(message) != code.k:
        raise DomainError(f"message length {len(message)} differs from K={code.k}")
    if any(not 0 <= m < code.p for m in message):
        raise DomainError("message symbols must lie in the field")
    out = []
    for x in code.points:
        acc = 0
        for coeff in reversed(message):
            acc = (acc * x + coeff) % code.p
        out.append(acc)
    return tuple(out)


def brute_force_list_recover(
    code: RSCode,
    lists: PositionLists,
    alpha: float,
    ell: int | None = None,
) -> list[tuple[int, ...]]:
    """All codewords agreeing with the position lists on >= alpha*N spots.

    Pure enumeration of the p**K messages; exact and deterministic, with
    output sorted lexicographically.  When ell is given, the total list
    mass sum(|A_i|) is checked against it up front.
    """
    if not 0 <= alpha <= 1:
        raise DomainError(f"agreement fraction {alpha} outside [0,1]")
    if len(lists) != code.n:
        raise DomainError(f"got {len(lists)} position lists for N={code.n}")
    for i, entries in enumerate(lists):
        if any(not 0 <= s < code.p for s in entries):
            raise DomainError(f"position list {i} holds symbols outside the field")
    mass = sum(len(entries) for entries in lists)
    if ell is not None and mass > ell:
        raise DomainError(f"total list mass {mass} exceeds the budget ell = {ell}")
    if code.p ** code.k > _RECOVER_SPAN_LIMIT:
        raise CapacityError(
            f"p**K = {code.p ** code.k} exceeds the enumeration limit {_RECOVER_SPAN_LIMIT}"
        )
    threshold = alpha * code.n
    sets = [frozenset(entries) for entries in lists]
    out = []
    for message in itertools.product(range(code.p), repeat=code.k):
        codeword = rs_encode(code, message)
        agreement = sum(1 for sym, entries in zip(codeword, sets) if sym in entries)
        if agreement >= threshold - 1e-12:
            out.append(codeword)
    out.sort()
    return out
