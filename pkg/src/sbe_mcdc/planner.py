"""Structural analysis: B-form/S-form decomposition and the relation table.

A normalized expression is cut into two-literal blocks (B-forms), single
literals (S-forms) and nested result blocks.  The relation table is one
boolean per adjacent pair of literals: ``True`` when the operator joining
them is ``&&``, ``False`` for ``||``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .expr import And, Expr, Not, Or, Var
from .normalize import Literal, as_normalized

AND = "and"
OR = "or"

SYMBOL = {AND: "∧", OR: "∨"}


def op_of(node: Expr) -> str:
    if isinstance(node, And):
        return AND
    if isinstance(node, Or):
        return OR
    raise TypeError(f"{type(node).__name__} has no operator")


def non_controlling(op: str) -> bool:
    """Value that lets a sibling decide the outcome: True under AND, False under OR."""
    return op == AND


@dataclass(frozen=True)
class SForm:
    literal: Literal

    @property
    def literals(self) -> tuple[Literal, ...]:
        return (self.literal,)

    def __str__(self):
        return f"S{self.literal.index + 1}({self.literal})"


@dataclass(frozen=True)
class BForm:
    left: Literal
    op: str
    right: Literal

    @property
    def literals(self) -> tuple[Literal, ...]:
        return (self.left, self.right)

    def __str__(self):
        return f"B{self.left.index + 1}{SYMBOL[self.op]}({self.left}, {self.right})"


@dataclass(frozen=True)
class ResultBlock:
    op: str
    children: tuple["FormTree", ...]

    @property
    def connectors(self) -> tuple[str, ...]:
        return (self.op,) * (len(self.children) - 1)

    @property
    def literals(self) -> tuple[Literal, ...]:
        return tuple(lit for c in self.children for lit in c.literals)

    def __str__(self):
        inner = f" {SYMBOL[self.op]} ".join(
            f"({c})" if isinstance(c, ResultBlock) else str(c) for c in self.children
        )
        return inner


FormTree = Union[SForm, BForm, ResultBlock]


def _is_literal(node: Expr) -> bool:
    return isinstance(node, (Var, Not))


def decompose(n) -> FormTree:
    """Cut a normalized expression into B-forms, S-forms and result blocks.

    Inside each operator group, consecutive literals are paired left to right
    into B-forms; an odd one out becomes an S-form.  Nested groups recurse.
    """
    n = as_normalized(n)
    counter = iter(n.provenance)

    def walk(node: Expr) -> FormTree:
        if _is_literal(node):
            return SForm(next(counter))
        op = op_of(node)
        if len(node.children) == 2 and all(_is_literal(c) for c in node.children):
            return BForm(next(counter), op, next(counter))
        parts: list[FormTree] = []
        run: list[Literal] = []

        def flush():
            for i in range(0, len(run) - 1, 2):
                parts.append(BForm(run[i], op, run[i + 1]))
            if len(run) % 2:
                parts.append(SForm(run[-1]))
            run.clear()

        for child in node.children:
            if _is_literal(child):
                run.append(next(counter))
            else:
                flush()
                parts.append(walk(child))
        flush()
        return ResultBlock(op, tuple(parts))

    return walk(n.expr)


@dataclass(frozen=True)
class RelationTable:
    values: tuple[bool, ...]

    def __len__(self):
        return len(self.values)

    def __getitem__(self, k):
        return self.values[k]

    def __iter__(self):
        return iter(self.values)

    def __str__(self):
        return "RT(" + ",".join("T" if v else "F" for v in self.values) + ")"


def operator_scan(n) -> tuple[str, ...]:
    """Operators met between consecutive literals, read left to right."""
    n = as_normalized(n)
    ops: list[str] = []

    def walk(node: Expr):
        if _is_literal(node):
            return
        op = op_of(node)
        for i, child in enumerate(node.children):
            if i:
                ops.append(op)
            walk(child)

    walk(n.expr)
    return tuple(ops)


def relation_table(n) -> RelationTable:
    return RelationTable(tuple(op == AND for op in operator_scan(n)))


def rt_slice(form: FormTree, rt: RelationTable) -> tuple[bool, ...]:
    """The relation-table values a form reads its preferred first row from.

    A B-form over literals ``i, i+1`` takes the pair at its own operator and
    the following one, or the preceding one when it ends the expression.
    An S-form takes the value of the operator connecting it.
    """
    if isinstance(form, BForm):
        i = form.left.index
        if len(rt) == 1:
            return (rt[0], rt[0])
        if i + 1 < len(rt):
            return (rt[i], rt[i + 1])
        return (rt[i - 1], rt[i])
    if isinstance(form, SForm):
        i = form.literal.index
        return (rt[i - 1] if i > 0 else rt[0],)
    raise TypeError("result blocks have no single slice")


def render_tree(tree: FormTree, indent: str = "") -> str:
    """Indented multi-line view of a decomposition, for ``check --verbose``."""
    if isinstance(tree, ResultBlock):
        lines = [f"{indent}Result[{SYMBOL[tree.op]}]"]
        for child in tree.children:
            lines.append(render_tree(child, indent + "  "))
        return "\n".join(lines)
    return indent + str(tree)


__all__ = [
    "AND",
    "OR",
    "BForm",
    "FormTree",
    "RelationTable",
    "ResultBlock",
    "SForm",
    "decompose",
    "non_controlling",
    "op_of",
    "operator_scan",
    "relation_table",
    "render_tree",
    "rt_slice",
]
