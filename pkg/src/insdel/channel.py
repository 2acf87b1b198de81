"""Insertion-deletion channel simulation, random and block-adversarial.

Edit scripts use sequential semantics: each operation's position refers
to the word as it stands when that operation is applied, with positions
counted from 1.  A deletion removes the symbol at position p; an
insertion places its symbol before position p, so p = 1 prepends and
p = current length + 1 appends.  This makes scripts replayable and
serializable without any global coordinate bookkeeping.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .codes import Seed, philox_generator
from .core import DomainError, ScriptError, Word

DELETE = "del"
INSERT = "ins"


@dataclass(frozen=True)
class EditScript:
    """Ordered insertion/deletion operations with 1-based positions.

    Operations are tuples ("del", pos) or ("ins", pos, symbol).
    """

    ops: tuple[tuple, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "ops", tuple(tuple(op) for op in self.ops))
        for op in self.ops:
            if op[0] == DELETE and len(op) == 2:
                continue
            if op[0] == INSERT and len(op) == 3:
                continue
            raise ScriptError(f"malformed operation {op!r}")

    def __len__(self) -> int:
        return len(self.ops)

    def to_json_list(self) -> list[dict]:
        out = []
        for op in self.ops:
            if op[0] == DELETE:
                out.append({"op": DELETE, "pos": op[1]})
            else:
                out.append({"op": INSERT, "pos": op[1], "sym": op[2]})
        return out

    @classmethod
    def from_json_list(cls, items: Iterable[dict]) -> "EditScript":
        ops = []
        for item in items:
            if item.get("op") == DELETE:
                ops.append((DELETE, int(item["pos"])))
            elif item.get("op") == INSERT:
                ops.append((INSERT, int(item["pos"]), int(item["sym"])))
            else:
                raise ScriptError(f"malformed operation record {item!r}")
        return cls(tuple(ops))


def apply_script(w: Word, script: EditScript) -> Word:
    """Apply an edit script; the result is within len(script) of w."""
    syms = list(w.symbols)
    for op in script.ops:
        if op[0] == DELETE:
            pos = op[1]
            if not 1 <= pos <= len(syms):
                raise ScriptError(f"delete position {pos} invalid at length {len(syms)}")
            del syms[pos - 1]
        else:
            pos, sym = op[1], op[2]
            if not 1 <= pos <= len(syms) + 1:
                raise ScriptError(f"insert position {pos} invalid at length {len(syms)}")
            if not 0 <= sym < w.q:
                raise ScriptError(f"insert symbol {sym} outside alphabet of size {w.q}")
            syms.insert(pos - 1, sym)
    return Word(tuple(syms), w.q)


def _random_script_ops(
    rng: np.random.Generator, q: int, start_len: int, n_ins: int, n_del: int
) -> list[tuple]:
    """Deletions first, then insertions; uniform positions and symbols."""
    ops: list[tuple] = []
    length = start_len
    for _ in range(n_del):
        ops.append((DELETE, int(rng.integers(1, length + 1))))
        length -= 1
    for _ in range(n_ins):
        ops.append((INSERT, int(rng.integers(1, length + 2)), int(rng.integers(0, q))))
        length += 1
    return ops


def random_channel(w: Word, n_ins: int, n_del: int, seed: Seed) -> tuple[Word, EditScript]:
    """Uniformly random channel: n_del deletions then n_ins insertions.

    Output length is always len(w) + n_ins - n_del, and the distance to
    w is at most n_ins + n_del.  Deterministic per seed.
    """
    if n_ins < 0 or n_del < 0:
        raise DomainError("operation counts must be nonnegative")
    if n_del > len(w):
        raise DomainError(f"cannot delete {n_del} symbols from a word of length {len(w)}")
    rng = philox_generator(seed)
    script = EditScript(tuple(_random_script_ops(rng, w.q, len(w), n_ins, n_del)))
    return apply_script(w, script), script


def adversarial_block_channel(
    c: Word, block_len: int, budgets: list[int], seed: Seed
) -> tuple[Word, EditScript]:
    """Apply an exact per-block edit budget to each length-block_len block.

    Block i gets its own Philox stream keyed by (seed, i), so blocks can
    be processed independently without changing the outcome.  Each block
    script has exactly budgets[i] operations (a uniform coin picks delete
    versus insert while deletion is possible), so the realized per-block
    distance never exceeds the budget.  The returned script is the
    concatenation of the block scripts with positions shifted into
    whole-word coordinates, in left-to-right application order.
    """
    if block_len < 1:
        raise DomainError("block length must be at least 1")
    if len(c) != block_len * len(budgets):
        raise DomainError(
            f"word length {len(c)} is not block_len * #budgets = "
            f"{block_len * len(budgets)}"
        )
    for i, b in enumerate(budgets):
        if not 0 <= b <= 2 * block_len:
            raise DomainError(f"budget {b} for block {i} outside [0, 2*block_len]")
    pieces: list[tuple[int, ...]] = []
    global_ops: list[tuple] = []
    offset = 0
    for i, b in enumerate(budgets):
        block = Word(c.symbols[i * block_len : (i + 1) * block_len], c.q)
        rng = np.random.Generator(np.random.Philox(np.random.SeedSequence((seed, i))))
        local_ops: list[tuple] = []
        length = len(block)
        for _ in range(b):
            if length > 0 and int(rng.integers(0, 2)) == 0:
                local_ops.append((DELETE, int(rng.integers(1, length + 1))))
                length -= 1
            else:
                local_ops.append(
                    (INSERT, int(rng.integers(1, length + 2)), int(rng.integers(0, c.q)))
                )
                length += 1
        transformed = apply_script(block, EditScript(tuple(local_ops)))
        for op in local_ops:
            if op[0] == DELETE:
                global_ops.append((DELETE, op[1] + offset))
            else:
                global_ops.append((INSERT, op[1] + offset, op[2]))
        pieces.append(transformed.symbols)
        offset += len(transformed)
    result = Word(tuple(s for piece in pieces for s in piece), c.q)
    return result, EditScript(tuple(global_ops))
