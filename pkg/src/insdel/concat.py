"""Indexed concatenation codes: encoding, window grids, list decoding.

The construction concatenates a Reed-Solomon outer code with a small
random inner code whose encoder takes (index, outer symbol) pairs.  The
index is the block position reduced to a short cyclic counter, which is
what lets the decoder place a locally decoded symbol into the right
outer positions.  Decoding scans a grid of candidate windows over the
received word, list-decodes each window against the inner encoder's
whole domain, and narrows the admissible block positions for every hit
by exact interval arithmetic before handing the accumulated position
lists to brute-force outer list recovery.

All window and feasibility arithmetic runs on Fractions.  Rational
parameters may be given as Fraction, int, or string ("2/5"); floats
are accepted and converted via their shortest decimal representation.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .codes import Code, Seed, sample_word_sequence
from .core import DomainError, RegimeWarning, Word, insdel_distance
from .decode import RSCode, brute_force_list_recover, rs_encode

FractionLike = Fraction | int | float | str


def _frac(value: FractionLike, name: str) -> Fraction:
    try:
        if isinstance(value, float):
            return Fraction(str(value))
        return Fraction(value)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise DomainError(f"{name} is not a valid rational: {value!r}") from exc


@dataclass(frozen=True)
class InnerEncoder:
    """Injective encoder from (index, symbol) pairs to q-ary words.

    Indices run 1..index_count, symbols 0..symbol_count-1, and the pair
    (index, sym) maps to words[(index-1)*symbol_count + sym].  Words are
    distinct by construction, so the map is injective.
    """

    q: int
    n: int
    index_count: int
    symbol_count: int
    words: tuple[Word, ...]
    seed: Seed | None = None

    def __post_init__(self) -> None:
        if self.index_count < 1 or self.symbol_count < 1:
            raise DomainError("inner encoder domain must be nonempty")
        expected = self.index_count * self.symbol_count
        if len(self.words) != expected:
            raise DomainError(
                f"inner encoder needs {expected} words, got {len(self.words)}"
            )
        if len(set(self.words)) != len(self.words):
            raise DomainError("inner encoder words must be distinct")
        for w in self.words:
            if w.q != self.q or len(w) != self.n:
                raise DomainError("inner encoder words must share alphabet and length")

    @classmethod
    def sample(
        cls, q: int, n: int, index_count: int, symbol_count: int, seed: Seed
    ) -> "InnerEncoder":
        words = sample_word_sequence(q, n, index_count * symbol_count, seed)
        return cls(
            q=q,
            n=n,
            index_count=index_count,
            symbol_count=symbol_count,
            words=words,
            seed=seed,
        )

    def encode(self, index: int, sym: int) -> Word:
        if not 1 <= index <= self.index_count:
            raise DomainError(
                f"encoder index {index} outside [1, {self.index_count}]"
            )
        if not 0 <= sym < self.symbol_count:
            raise DomainError(
                f"outer symbol {sym} outside [0, {self.symbol_count})"
            )
        return self.words[(index - 1) * self.symbol_count + sym]

    def domain(self) -> Iterator[tuple[int, int, Word]]:
        """Yield every (index, symbol, codeword) triple."""
        pos = 0
        for index in range(1, self.index_count + 1):
            for sym in range(self.symbol_count):
                yield index, sym, self.words[pos]
                pos += 1

    def as_code(self) -> Code:
        return Code(q=self.q, n=self.n, words=frozenset(self.words))


@dataclass(frozen=True, order=True)
class Window:
    """A candidate subword of the received word, on the alignment grid.

    phi and the nominal length lam/mu describe grid coordinates: the
    window starts at offset phi = lam * step and nominally spans
    mu * step symbols.  lambda_len is the extractable length after
    clipping at the right edge of the received word; feasibility
    arithmetic keeps using the nominal mu.
    """

    phi: int
    lambda_len: int
    lam: int
    mu: int

    def __post_init__(self) -> None:
        if self.phi < 0 or self.lambda_len < 0 or self.lam < 0 or self.mu < 0:
            raise DomainError("window coordinates must be nonnegative")

    def content(self, r: Word) -> Word:
        return r[self.phi : self.phi + self.lambda_len]


@dataclass(frozen=True)
class ConcatParams:
    """Parameters tying the outer code, inner encoder, and budgets together.

    Derived quantities: tau_hat = tau_in - tau_star is the alignment
    grid pitch (tau_hat * n must be a positive integer), and
    tau = (1 - alpha_out) * tau_in - eps_conc is the decoding radius as
    a fraction of the total length n*N.
    """

    N: int
    n: int
    q: int
    outer: RSCode
    inner: InnerEncoder
    eps_cont: Fraction
    eps_in: Fraction
    eps_out: Fraction
    eps_conc: Fraction
    tau_in: Fraction
    tau_star: Fraction
    alpha_out: Fraction
    ell_out: int

    def __post_init__(self) -> None:
        for name in ("eps_cont", "eps_in", "eps_out", "eps_conc", "tau_in",
                     "tau_star", "alpha_out"):
            object.__setattr__(self, name, _frac(getattr(self, name), name))
        if self.N < 1 or self.n < 1:
            raise DomainError("outer and inner lengths must be positive")
        if self.q < 2:
            raise DomainError("alphabet size must be at least 2")
        if self.ell_out < 0:
            raise DomainError("outer list-mass budget must be nonnegative")
        for name in ("eps_in", "eps_out", "eps_conc"):
            if getattr(self, name) < 0:
                raise DomainError(f"{name} must be nonnegative")
        if not 0 < self.alpha_out <= 1:
            raise DomainError("agreement fraction alpha_out must be in (0, 1]")
        if not 0 < self.tau_star < self.tau_in:
            raise DomainError("need 0 < tau_star < tau_in")
        if not 0 < self.eps_cont <= 1:
            raise DomainError("eps_cont must be in (0, 1]")
        if (self.eps_cont * self.N).denominator != 1 or self.eps_cont * self.N < 1:
            raise DomainError("eps_cont * N must be a positive integer")
        step = self.tau_hat * self.n
        if step.denominator != 1 or step < 1:
            raise DomainError("(tau_in - tau_star) * n must be a positive integer")
        if self.tau < 0:
            raise DomainError(
                "decoding radius (1 - alpha_out) * tau_in - eps_conc is negative"
            )
        if self.outer.n != self.N:
            raise DomainError(
                f"outer code length {self.outer.n} differs from N={self.N}"
            )
        if self.inner.q != self.q or self.inner.n != self.n:
            raise DomainError("inner encoder alphabet or length mismatch")
        if self.inner.index_count != self.eps_cont_N:
            raise DomainError(
                f"inner encoder has {self.inner.index_count} indices, "
                f"expected eps_cont * N = {self.eps_cont_N}"
            )
        if self.inner.symbol_count != self.outer.p:
            raise DomainError("inner encoder symbol range must match the outer field")
        if self.alpha_out < 1:
            needed = self.tau_in - self.eps_conc / (1 - self.alpha_out)
            if self.tau_star < needed:
                warnings.warn(
                    "tau_star below tau_in - eps_conc/(1 - alpha_out); the "
                    "decoding guarantee needs the good-block threshold to "
                    "absorb the whole budget",
                    RegimeWarning,
                    stacklevel=2,
                )

    @property
    def tau_hat(self) -> Fraction:
        return self.tau_in - self.tau_star

    @property
    def tau_hat_n(self) -> int:
        return int(self.tau_hat * self.n)

    @property
    def eps_cont_N(self) -> int:
        return int(self.eps_cont * self.N)

    @property
    def tau(self) -> Fraction:
        return (1 - self.alpha_out) * self.tau_in - self.eps_conc

    def index_for_position(self, i: int) -> int:
        """Cyclic encoder index carried by block position i (1-based)."""
        if not 1 <= i <= self.N:
            raise DomainError(f"block position {i} outside [1, {self.N}]")
        return (i - 1) % self.eps_cont_N + 1


@dataclass(frozen=True)
class ConcatDecodeReport:
    """Decoder output plus the bookkeeping the runtime bounds refer to."""

    codewords: tuple[Word, ...]
    outer_codewords: tuple[tuple[int, ...], ...]
    position_lists: tuple[frozenset[int], ...]
    window_count: int
    inner_match_total: int
    max_inner_list: int
    list_mass: int


def make_concat_params(
    N: int,
    n: int,
    q: int,
    p: int,
    K: int,
    eps_cont: FractionLike,
    eps_in: FractionLike,
    eps_out: FractionLike,
    eps_conc: FractionLike,
    tau_in: FractionLike,
    tau_star: FractionLike,
    alpha_out: FractionLike,
    ell_out: int,
    inner_seed: Seed,
    points: Sequence[int] | None = None,
) -> ConcatParams:
    """Build params, sampling the inner encoder from the given seed."""
    if points is None:
        points = tuple(range(N))
    outer = RSCode(p=p, k=K, points=tuple(points))
    eps_cont_f = _frac(eps_cont, "eps_cont")
    count = eps_cont_f * N
    if count.denominator != 1 or count < 1:
        raise DomainError("eps_cont * N must be a positive integer")
    inner = InnerEncoder.sample(q, n, int(count), p, inner_seed)
    return ConcatParams(
        N=N,
        n=n,
        q=q,
        outer=outer,
        inner=inner,
        eps_cont=eps_cont_f,
        eps_in=_frac(eps_in, "eps_in"),
        eps_out=_frac(eps_out, "eps_out"),
        eps_conc=_frac(eps_conc, "eps_conc"),
        tau_in=_frac(tau_in, "tau_in"),
        tau_star=_frac(tau_star, "tau_star"),
        alpha_out=_frac(alpha_out, "alpha_out"),
        ell_out=ell_out,
    )


def concat_encode(params: ConcatParams, outer_codeword: Sequence[int]) -> Word:
    """Concatenate the inner encodings of an outer codeword, block by block."""
    if len(outer_codeword) != params.N:
        raise DomainError(
            f"outer codeword length {len(outer_codeword)} differs from N={params.N}"
        )
    symbols: list[int] = []
    for i, sym in enumerate(outer_codeword, start=1):
        block = params.inner.encode(params.index_for_position(i), sym)
        symbols.extend(block.symbols)
    return Word(tuple(symbols), params.q)


def concat_encode_message(params: ConcatParams, message: Sequence[int]) -> Word:
    """Encode an outer message: Reed-Solomon first, then concatenation."""
    return concat_encode(params, rs_encode(params.outer, message))


def build_windows(params: ConcatParams, M: int) -> set[Window]:
    """All grid windows over a received word of length M.

    Start offsets are lam * step for lam in a range wide enough to reach
    the end of the received word; nominal lengths are mu * step with mu
    spanning every length an inner block can stretch or shrink to on the
    grid.  Windows are clipped at the right edge but kept, including
    empty ones, so the grid coordinate ranges stay rectangular.
    """
    if M < 0:
        raise DomainError("received length must be nonnegative")
    step = params.tau_hat_n
    tau_hat = params.tau_hat
    lam_top = 1 + (Fraction(M, params.n) - max(Fraction(0), 1 - params.tau_star)) / tau_hat
    if lam_top < 0:
        return set()
    lam_hi = math.floor(lam_top)
    mu_lo = math.ceil(max(Fraction(0), (1 - params.tau_star) / tau_hat))
    mu_hi = math.floor(1 + (1 + params.tau_star) / tau_hat)
    out: set[Window] = set()
    for lam in range(lam_hi + 1):
        phi = lam * step
        for mu in range(mu_lo, mu_hi + 1):
            lambda_len = max(0, min(mu * step, M - phi))
            out.add(Window(phi=phi, lambda_len=lambda_len, lam=lam, mu=mu))
    total = params.n * params.N
    if max(0, (1 - params.tau) * total) <= M <= (1 + params.tau) * total:
        width = ((1 + params.tau) * params.N - max(Fraction(0), 1 - params.tau_star))
        lengths = min(2 * params.tau_star, 1 + params.tau_star)
        cap = (width / tau_hat + 2) * (lengths / tau_hat + 2)
        assert len(out) <= cap, "window census exceeded its linear-size cap"
    return out


def align_window(sp: int, length: int, tau_hat_n: int) -> Window:
    """Snap an arbitrary subword to the alignment grid.

    The returned grid window's content differs from the original
    subword's content by at most tau_hat_n insdel operations: depending
    on where the fractional parts of the start and length fall, the grid
    window either contains the subword (stretch by one step) or is
    contained in it (shrink by one step).  Exact grid multiples are
    returned unchanged.
    """
    if sp < 0 or length < 0:
        raise DomainError("start offset and length must be nonnegative")
    if tau_hat_n < 1:
        raise DomainError("grid step must be a positive integer")
    sp_whole, sp_rem = divmod(sp, tau_hat_n)
    len_whole, len_rem = divmod(length, tau_hat_n)
    if sp_rem == 0 and len_rem == 0:
        return Window(phi=sp, lambda_len=length, lam=sp_whole, mu=len_whole)
    if sp_rem + len_rem < tau_hat_n:
        lam, mu = sp_whole, len_whole + 1
    else:
        lam, mu = sp_whole + 1, len_whole
    return Window(phi=lam * tau_hat_n, lambda_len=mu * tau_hat_n, lam=lam, mu=mu)


def feasible_jN(i: int, lam: int, mu: int, params: ConcatParams, M: int) -> set[int]:
    """Block-position residue classes a window can speak about.

    i is the zero-based encoder index (index minus one).  A returned
    value j_N corresponds to block position j = 1 + i + j_N * eps_cont_N.
    The closed-form interval is guarded by the window-level feasibility
    gates (inner radius, window-in-word, and the budget's emptiness
    condition), which makes the result match a direct scan of the
    per-position requirements; positions outside [1, N] are dropped.
    """
    if i < 0 or lam < 0 or mu < 0 or M < 0:
        raise DomainError("feasibility inputs must be nonnegative")
    n, N = params.n, params.N
    step = params.tau_hat_n
    sp = lam * step
    length = mu * step
    stretch = n - length
    if abs(stretch) > params.tau_in * n:
        return set()
    if sp > M - length:
        return set()
    budget = params.tau * n * N - abs(stretch)
    if abs((M - n * N) + stretch) > budget:
        return set()
    den = params.eps_cont_N * n
    lo_num = ((1 - params.tau) * n * N - M) / 2 + sp - min(stretch, 0) - i * n
    hi_num = ((1 + params.tau) * n * N - M) / 2 + sp - max(stretch, 0) - i * n
    lo = max(Fraction(0), lo_num / den)
    hi = hi_num / den
    first = math.ceil(lo)
    last = math.floor(hi)
    out = {
        j_N
        for j_N in range(first, last + 1)
        if 1 <= 1 + i + j_N * params.eps_cont_N <= N
    }
    assert len(out) <= params.tau / params.eps_cont + 1, (
        "feasible position count exceeded tau/eps_cont + 1"
    )
    return out


def _lcs_prefix_row(word: tuple[int, ...], content: tuple[int, ...]) -> list[int]:
    """row[j] = length of the longest common subsequence of word and content[:j]."""
    cols = len(content)
    row = [0] * (cols + 1)
    for sym in word:
        prev_diag = 0
        for j in range(1, cols + 1):
            prev_row = row[j]
            if content[j - 1] == sym:
                row[j] = prev_diag + 1
            elif row[j - 1] > row[j]:
                row[j] = row[j - 1]
            prev_diag = prev_row
    return row


def list_decode_concat_detailed(params: ConcatParams, r: Word) -> ConcatDecodeReport:
    """Window-scan list decoding with full bookkeeping.

    Every grid window is list-decoded against the inner encoder's whole
    domain; each hit contributes its outer symbol to the position lists
    of every feasible block position.  Outer recovery is brute force.
    If the received word is within (1 - alpha_out) * tau_in - eps_conc
    of a codeword (as a fraction of n*N), that codeword is in the output.
    """
    if r.q != params.q:
        raise DomainError(f"received word alphabet {r.q} differs from q={params.q}")
    M = len(r)
    total = params.n * params.N
    lo = max(0, (1 - params.tau) * total)
    hi = (1 + params.tau) * total
    if not lo <= M <= hi:
        raise DomainError(
            f"received length {M} outside the decodable range [{lo}, {hi}]"
        )
    windows = sorted(build_windows(params, M))
    n = params.n
    tau_in_n = params.tau_in * n
    r_syms = r.symbols
    lists: list[set[int]] = [set() for _ in range(params.N)]
    domain = list(params.inner.domain())
    jn_cache: dict[tuple[int, int, int], set[int]] = {}
    match_total = 0
    max_inner_list = 0

    by_phi: dict[int, list[Window]] = {}
    for win in windows:
        by_phi.setdefault(win.phi, []).append(win)
    for phi, group in by_phi.items():
        longest = max(win.lambda_len for win in group)
        content = r_syms[phi : phi + longest]
        hits_per_window = {win: 0 for win in group}
        for index, sym, codeword in domain:
            row = _lcs_prefix_row(codeword.symbols, content)
            for win in group:
                length = win.lambda_len
                if n + length - 2 * row[length] > tau_in_n:
                    continue
                hits_per_window[win] += 1
                key = (index - 1, win.lam, win.mu)
                positions = jn_cache.get(key)
                if positions is None:
                    positions = feasible_jN(index - 1, win.lam, win.mu, params, M)
                    jn_cache[key] = positions
                for j_N in positions:
                    j = 1 + (index - 1) + j_N * params.eps_cont_N
                    lists[j - 1].add(sym)
        match_total += sum(hits_per_window.values())
        max_inner_list = max(max_inner_list, *hits_per_window.values())

    mass = sum(len(entries) for entries in lists)
    cap = len(windows) * max_inner_list * (params.tau / params.eps_cont + 1)
    assert mass <= cap, "position-list mass exceeded the window-count bound"
    frozen = tuple(frozenset(entries) for entries in lists)
    outer_hits = brute_force_list_recover(
        params.outer, frozen, float(params.alpha_out), ell=params.ell_out
    )
    encoded = sorted(
        (concat_encode(params, cw) for cw in outer_hits), key=lambda w: w.symbols
    )
    return ConcatDecodeReport(
        codewords=tuple(encoded),
        outer_codewords=tuple(outer_hits),
        position_lists=frozen,
        window_count=len(windows),
        inner_match_total=match_total,
        max_inner_list=max_inner_list,
        list_mass=mass,
    )


def list_decode_concat(params: ConcatParams, r: Word) -> list[Word]:
    """All concatenated codewords the window-scan decoder can account for."""
    return list(list_decode_concat_detailed(params, r).codewords)


def good_index_count(
    c: Word,
    r: Word,
    params: ConcatParams,
    segment_lengths: Sequence[int],
) -> int:
    """Blocks whose received segment stayed within tau_star * n edits.

    The segmentation of r is supplied by the caller (a test harness that
    knows the true edit script); segment_lengths must cover r exactly
    with one segment per block.
    """
    if len(c) != params.n * params.N:
        raise DomainError("sent word length must be n * N")
    if len(segment_lengths) != params.N:
        raise DomainError(f"need {params.N} segment lengths, got {len(segment_lengths)}")
    if any(length < 0 for length in segment_lengths):
        raise DomainError("segment lengths must be nonnegative")
    if sum(segment_lengths) != len(r):
        raise DomainError("segment lengths must cover the received word exactly")
    threshold = params.tau_star * params.n
    good = 0
    pos = 0
    for i in range(params.N):
        block = c[i * params.n : (i + 1) * params.n]
        segment = r[pos : pos + segment_lengths[i]]
        pos += segment_lengths[i]
        if insdel_distance(block, segment) <= threshold:
            good += 1
    return good


def concat_stats(params: ConcatParams) -> dict:
    """Rate bookkeeping: overall rate vs the outer/inner product.

    The indexing overhead costs exactly K * log_q(index_count) / (n*N),
    so rate = r_out * r_in - overhead with overhead nonnegative.
    """
    n_total = params.n * params.N
    rate = params.outer.k * math.log(params.outer.p, params.q) / n_total
    r_out = params.outer.k / params.N
    r_in = math.log(params.eps_cont_N * params.outer.p, params.q) / params.n
    return {
        "rate": rate,
        "r_out": r_out,
        "r_in": r_in,
        "epsilon": r_out * r_in - rate,
        "code_size": params.outer.p ** params.outer.k,
        "length": n_total,
    }


def params_to_json_dict(params: ConcatParams) -> dict:
    """JSON-ready parameter record; rationals serialize as strings."""
    if params.inner.seed is None:
        raise DomainError("only seed-sampled inner encoders serialize to JSON")
    return {
        "N": params.N,
        "n": params.n,
        "q": params.q,
        "p": params.outer.p,
        "K": params.outer.k,
        "points": list(params.outer.points),
        "eps_cont": str(params.eps_cont),
        "eps_in": str(params.eps_in),
        "eps_out": str(params.eps_out),
        "eps_conc": str(params.eps_conc),
        "tau_in": str(params.tau_in),
        "tau_star": str(params.tau_star),
        "alpha_out": str(params.alpha_out),
        "ell_out": params.ell_out,
        "inner_seed": params.inner.seed,
    }


def params_from_json_dict(data: dict) -> ConcatParams:
    """Rebuild params from a JSON record, resampling the inner encoder."""
    try:
        return make_concat_params(
            N=int(data["N"]),
            n=int(data["n"]),
            q=int(data["q"]),
            p=int(data["p"]),
            K=int(data["K"]),
            eps_cont=data["eps_cont"],
            eps_in=data["eps_in"],
            eps_out=data["eps_out"],
            eps_conc=data["eps_conc"],
            tau_in=data["tau_in"],
            tau_star=data["tau_star"],
            alpha_out=data["alpha_out"],
            ell_out=int(data["ell_out"]),
            inner_seed=int(data["inner_seed"]),
            points=data.get("points"),
        )
    except KeyError as exc:
        raise DomainError(f"parameter record is missing field {exc.args[0]!r}") from exc
