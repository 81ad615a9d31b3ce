"""
How small can a test set be?
----------------------------
For a handful of conditions every subset of the truth table can be tried.
The smallest unique-cause set always has N+1 tests, which is what the
generator produces.  Masking is the looser criterion, so it never needs more.
"""

from collections import Counter

from sbe_mcdc import brute_force_minimal, generate, normalize, parse, render, variables
from sbe_mcdc.fuzz import random_corpus

e = parse("a && (!b || !c) && d || e")
result = brute_force_minimal(e)
print(render(e), "needs", result.size, "tests;", result.subsets_checked, "subsets tried")
for w in result.witness:
    print({k: int(v) for k, v in w.items()})

print(brute_force_minimal(parse("a && (b || c)"), "masking").size, "tests under masking")

# Random decisions: oracle, N+1 and generated size line up
sizes = Counter()
for expr in random_corpus(60, 2, 5, seed=3):
    n = len(variables(expr))
    best = brute_force_minimal(expr).size
    made = len(generate(normalize(expr)))
    assert best == made == n + 1
    sizes[n] += 1
print("checked", dict(sorted(sizes.items())))
