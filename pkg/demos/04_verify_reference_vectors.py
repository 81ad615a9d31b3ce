"""
Checking a reference test set
-----------------------------
The 24 reference vectors for the 23-condition benchmark decision are checked
with the coverage module alone, no generator involved.  The column labels
matter: the values follow the normalized literal order.
"""

from sbe_mcdc import parse, unique_cause_coverage
from sbe_mcdc.corpus import CASE1_COLUMNS, CASE1_ALPHA_HEADER, get_case, case1_assignments

e = parse(get_case(1).text)

report = unique_cause_coverage(e, case1_assignments(CASE1_COLUMNS))
print(report.format())

# Read with alphabetical labels instead, almost nothing is covered
wrong = unique_cause_coverage(e, case1_assignments(CASE1_ALPHA_HEADER))
print("alphabetical labels:", wrong.summary())

# Which pair shows each condition
for name, pair in report.pairs.items():
    print(f"{name}: rows {pair[0] + 1} and {pair[1] + 1}")
