"""
Parsing and normalizing a decision
----------------------------------
Negations are pushed down to the conditions, then sibling sub-expressions
are ordered by how many conditions they hold, largest first.
"""

from sbe_mcdc import normalize, parse, render, validate_sbe, variables
from sbe_mcdc.corpus import get_case

e = parse("a && !(b && c) && d || e")
print(render(e))
print(list(variables(e)))

validate_sbe(e)  # each condition once, so this is fine
n = normalize(e)
print(n.render())  # (!b || !c) && a && d || e
print([str(lit) for lit in n.provenance])  # literal columns of the test table

# A repeated condition is rejected
from sbe_mcdc import CoupledCondition

try:
    validate_sbe(parse("a && b || a && c"))
except CoupledCondition as exc:
    print("rejected:", exc)

# The largest benchmark decision, 23 conditions
big = normalize(parse(get_case(1).text))
print(big.n, "conditions")
print(big.render())
