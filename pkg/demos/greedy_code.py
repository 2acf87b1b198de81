"""Greedy code construction and the counting bounds that frame it."""

from insdel.bounds import singleton_max_size
from insdel.codes import code_stats, greedy_gv_code
from insdel.core import word
from insdel.decode import brute_force_list_decode

n, d, q = 7, 4, 2
code = greedy_gv_code(q, n, d)
stats = code_stats(code)
print(f"greedy scan over all {q}**{n} words, keeping distance >= {d}:")
for w in code.sorted_words():
    print(f"  {w}")
print(f"size {len(code.words)}, measured min distance {stats.min_distance}")
print(f"singleton-style ceiling for these parameters: {singleton_max_size(n, d, q)}")

# Unique decoding radius is (d-1)//2; a corrupted word still resolves.
sent = code.sorted_words()[1]
received = word(sent.symbols[1:], q)  # one deletion
result = brute_force_list_decode(code, received, (d - 1) // 2)
print(f"\nsent {sent}, received {received}, decoded {result.candidates}")
