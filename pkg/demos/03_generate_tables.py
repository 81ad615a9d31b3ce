"""
Generating N+1 tests
--------------------
Each form contributes a small table; tables are joined on a shared first
row, so every new condition costs exactly one extra test.
"""

import numpy as np

from sbe_mcdc import generate, normalize, parse, to_assignments, unique_cause_coverage, variables
from sbe_mcdc.planner import decompose

for text in ["A && B", "A || B || C", "(A && B) && (C || D)", "a && (!b || !c) && d || e"]:
    e = parse(text)
    t = generate(normalize(e))
    print(text, "->", t.shape)
    print(t.format())  # columns are literals, so !b reads T when b is false
    print()

# The same tests in terms of the variables, with the decision per row
e = parse("a && (!b || !c) && d || e")
order = variables(e)
tests = to_assignments(generate(normalize(e)), order)
values = np.array([[a[v] for v in order] for a in tests], dtype=int)
print(list(order))
print(values)
print(unique_cause_coverage(e, tests).format())

# Table size grows by one per condition
for size in range(2, 10):
    names = [f"c{i}" for i in range(size)]
    text = " || ".join(" && ".join(names[i:i + 3]) for i in range(0, size, 3))
    n = normalize(parse(text))
    print(n.n, len(generate(n)), decompose(n))
