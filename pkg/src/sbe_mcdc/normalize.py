"""Preprocessing: negation push-down and structural sorting."""

from __future__ import annotations

from dataclasses import dataclass

from .expr import And, Expr, Not, Or, Var, is_nnf, make_group, operand_count, render, validate_sbe


def pushdown_not(e: Expr) -> Expr:
    """Rewrite ``e`` into negation normal form using De Morgan's laws."""
    return _push(e, negate=False)


def _push(e: Expr, negate: bool) -> Expr:
    if isinstance(e, Var):
        return Not(e) if negate else e
    if isinstance(e, Not):
        return _push(e.child, not negate)
    kind = type(e)
    if negate:
        kind = Or if kind is And else And
    return make_group(kind, [_push(c, negate) for c in e.children])


def sort_structure(e: Expr) -> Expr:
    """Order siblings by operand count, largest first, at every level.

    The sort is stable, so equally sized siblings keep their source order.
    """
    if isinstance(e, (Var, Not)):
        return e
    children = sorted((sort_structure(c) for c in e.children), key=operand_count, reverse=True)
    return type(e)(tuple(children))


@dataclass(frozen=True)
class Literal:
    """One operand of a normalized expression: a condition and its polarity."""

    name: str
    negated: bool
    index: int

    def __str__(self):
        return ("!" if self.negated else "") + self.name


def literals(e: Expr) -> tuple[Literal, ...]:
    """Literals of an NNF expression, left to right."""
    out = []

    def walk(node: Expr, negated: bool):
        if isinstance(node, Var):
            out.append(Literal(node.name, negated, len(out)))
        elif isinstance(node, Not):
            walk(node.child, not negated)
        else:
            for c in node.children:
                walk(c, negated)

    walk(e, False)
    return tuple(out)


@dataclass(frozen=True)
class NormalizedExpr:
    """An SBE in negation normal form with siblings sorted by size.

    ``provenance[i]`` is the ``i``-th literal read left to right.
    """

    expr: Expr
    provenance: tuple[Literal, ...]

    @classmethod
    def from_nnf(cls, e: Expr) -> "NormalizedExpr":
        """Wrap an NNF expression as-is, without sorting it."""
        if not is_nnf(e):
            raise ValueError("expression is not in negation normal form")
        validate_sbe(e)
        return cls(e, literals(e))

    @property
    def n(self) -> int:
        return len(self.provenance)

    def render(self) -> str:
        return render(self.expr)

    def __str__(self):
        return self.render()


def normalize(e: Expr) -> NormalizedExpr:
    validate_sbe(e)
    nnf = sort_structure(pushdown_not(e))
    return NormalizedExpr(nnf, literals(nnf))


def as_normalized(e) -> NormalizedExpr:
    """Accept a :class:`NormalizedExpr` or an NNF :data:`Expr`."""
    if isinstance(e, NormalizedExpr):
        return e
    return NormalizedExpr.from_nnf(e)


__all__ = [
    "Literal",
    "NormalizedExpr",
    "as_normalized",
    "literals",
    "normalize",
    "pushdown_not",
    "sort_structure",
]
