"""Reference evaluation independent of the library's evaluators."""

import itertools

from sbe_mcdc.expr import And, Not, Or, Var


def scalar_eval(e, a):
    """Plain recursive evaluation, kept separate from the library's evaluators."""
    if isinstance(e, Var):
        return bool(a[e.name])
    if isinstance(e, Not):
        return not scalar_eval(e.child, a)
    if isinstance(e, And):
        return all(scalar_eval(c, a) for c in e.children)
    if isinstance(e, Or):
        return any(scalar_eval(c, a) for c in e.children)
    raise TypeError(e)


def every_assignment(names):
    for bits in itertools.product((False, True), repeat=len(names)):
        yield dict(zip(names, bits))


def raw_unique_cause(e, tests, names):
    """Conditions with an independence pair, found by literal rule checks."""
    covered = set()
    for c in names:
        for x, y in itertools.combinations(tests, 2):
            if (x[c] != y[c] and scalar_eval(e, x) != scalar_eval(e, y)
                    and all(x[j] == y[j] for j in names if j != c)):
                covered.add(c)
                break
    return covered


def toggled(a, c):
    b = dict(a)
    b[c] = not b[c]
    return b


def raw_masking(e, tests, names):
    """Masking coverage by direct Boolean-difference checks."""
    def bd(a, c):
        return scalar_eval(e, a) != scalar_eval(e, toggled(a, c))

    covered = set()
    for c in names:
        for x, y in itertools.combinations(tests, 2):
            if (x[c] != y[c] and scalar_eval(e, x) != scalar_eval(e, y)
                    and bd(x, c) and bd(y, c)):
                covered.add(c)
                break
    return covered


# Lines recorded by the acceptance suite, echoed in the terminal summary.
ACCEPTANCE_LINES: list[str] = []
