"""
Forms and the relation table
----------------------------
Adjacent literals are grouped into two-literal B-forms and single S-forms.
The relation table holds one value per adjacent literal pair: T when the two
meet under an AND, F under an OR.
"""

from sbe_mcdc import decompose, normalize, parse, relation_table
from sbe_mcdc.normalize import NormalizedExpr, pushdown_not
from sbe_mcdc.planner import render_tree, rt_slice

n = normalize(parse("a && (!b || !c) && d || e"))
tree = decompose(n)
print(tree)
print(render_tree(tree))
print(relation_table(n))

# An already-ordered structure can be planned as is, without sorting
s = NormalizedExpr.from_nnf(pushdown_not(parse("(A && B) && (C || D)")))
rt = relation_table(s)
print(rt)  # RT(T,T,F)
for form in decompose(s).children:
    print(form, "starts from", rt_slice(form, rt))
