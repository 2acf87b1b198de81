"""Certifying list-decodability by scanning ball centers.

A code is (tau_n, L) list-decodable when no received word of length
within tau_n of n attracts more than L codewords.  The exhaustive mode
proves it; the sampled mode probes large spaces cheaply.
"""

from insdel.codes import Code, sample_random_code
from insdel.core import iter_words
from insdel.decode import certify_list_decodable

sampled_code = sample_random_code(2, 5, 8, seed=20250816)
for L in (1, 2, 3):
    result = certify_list_decodable(sampled_code, tau_n=1, L=L)
    verdict = "certified" if result.ok else f"violated at {result.witness!r}"
    print(f"tau_n=1, L={L}: {verdict}")

# The full binary square is maximally crowded: the empty word is within
# two edits of every length-2 word, so L=3 fails with that witness.
square = Code(q=2, n=2, words=frozenset(iter_words(2, 2)))
result = certify_list_decodable(square, tau_n=2, L=3)
print(f"\nfull square, tau_n=2, L=3: ok={result.ok}, witness={result.witness!r}")

sampled = certify_list_decodable(square, tau_n=2, L=3, mode="sampled", samples=500, seed=7)
print(f"sampled probe agrees: ok={sampled.ok}, witness={sampled.witness!r}")
