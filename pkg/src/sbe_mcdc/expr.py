"""Boolean decision expressions over named conditions.

The accepted grammar is the C boolean subset::

    or    := and ( "||" and )*
    and   := unary ( "&&" unary )*
    unary := "!" unary | "(" or ")" | IDENT

``&&`` and ``||`` chains are flattened into n-ary nodes, so ``a && (b && c)``
and ``a && b && c`` parse to the same tree.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence, Union

import numpy as np

from .errors import CoupledCondition, ExprSyntaxError, MissingVariable

IDENT_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
RESERVED = frozenset({"true", "false"})

Assignment = Mapping[str, bool]


@dataclass(frozen=True)
class Var:
    name: str

    def __post_init__(self):
        if not IDENT_RE.fullmatch(self.name):
            raise ValueError(f"invalid condition name {self.name!r}")


@dataclass(frozen=True)
class Not:
    child: "Expr"


@dataclass(frozen=True)
class And:
    children: tuple["Expr", ...]

    def __post_init__(self):
        _check_group(self, And)


@dataclass(frozen=True)
class Or:
    children: tuple["Expr", ...]

    def __post_init__(self):
        _check_group(self, Or)


Expr = Union[Var, Not, And, Or]
Group = (And, Or)


def _check_group(node, kind):
    if not isinstance(node.children, tuple):
        object.__setattr__(node, "children", tuple(node.children))
    if len(node.children) < 2:
        raise ValueError(f"{kind.__name__} needs at least two children")
    if any(isinstance(c, kind) for c in node.children):
        raise ValueError(f"{kind.__name__} has a directly nested {kind.__name__}; use make_group")


def make_group(kind, children: Sequence[Expr]) -> Expr:
    """Build an ``And``/``Or`` node, splicing in same-kind children."""
    flat: list[Expr] = []
    for child in children:
        if isinstance(child, kind):
            flat.extend(child.children)
        else:
            flat.append(child)
    if len(flat) == 1:
        return flat[0]
    return kind(tuple(flat))


def make_and(*children: Expr) -> Expr:
    return make_group(And, children)


def make_or(*children: Expr) -> Expr:
    return make_group(Or, children)


# -- parsing ----------------------------------------------------------------

_TOKEN_RE = re.compile(r"\s*(?:(&&)|(\|\|)|(!)|(\()|(\))|([A-Za-z_][A-Za-z0-9_]*))")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens: list[tuple[str, str, int]] = []
        self._tokenize()
        self.pos = 0

    def _byte_offset(self, index: int) -> int:
        return len(self.text[:index].encode("utf-8"))

    def _tokenize(self):
        text = self.text
        i = 0
        kinds = ("&&", "||", "!", "(", ")", "ident")
        while True:
            while i < len(text) and text[i].isspace():
                i += 1
            if i >= len(text):
                break
            m = _TOKEN_RE.match(text, i)
            if m is None or m.end() == i:
                raise ExprSyntaxError(
                    f"unexpected character {text[i]!r}",
                    self._byte_offset(i),
                    frozenset({"identifier", "!", "("}),
                )
            for kind, group in zip(kinds, m.groups()):
                if group is not None:
                    start = m.start(kinds.index(kind) + 1)
                    self.tokens.append((kind, group, self._byte_offset(start)))
                    break
            i = m.end()
        self.tokens.append(("eof", "", self._byte_offset(len(text))))

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.pos]

    def advance(self) -> tuple[str, str, int]:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def fail(self, expected: set[str]):
        kind, value, offset = self.peek()
        what = "end of input" if kind == "eof" else repr(value)
        raise ExprSyntaxError(f"unexpected {what}", offset, frozenset(expected))

    def parse(self) -> Expr:
        if self.peek()[0] == "eof":
            self.fail({"identifier", "!", "("})
        node = self.parse_or()
        if self.peek()[0] != "eof":
            self.fail({"&&", "||", "end of input"})
        return node

    def parse_or(self) -> Expr:
        parts = [self.parse_and()]
        while self.peek()[0] == "||":
            self.advance()
            parts.append(self.parse_and())
        return make_group(Or, parts)

    def parse_and(self) -> Expr:
        parts = [self.parse_unary()]
        while self.peek()[0] == "&&":
            self.advance()
            parts.append(self.parse_unary())
        return make_group(And, parts)

    def parse_unary(self) -> Expr:
        kind, value, offset = self.peek()
        if kind == "!":
            self.advance()
            return Not(self.parse_unary())
        if kind == "(":
            self.advance()
            node = self.parse_or()
            if self.peek()[0] != ")":
                self.fail({")", "&&", "||"})
            self.advance()
            return node
        if kind == "ident":
            if value in RESERVED:
                raise ExprSyntaxError(
                    f"constant {value!r} is not a condition", offset, frozenset({"identifier"})
                )
            self.advance()
            return Var(value)
        self.fail({"identifier", "!", "("})


def parse(text: str) -> Expr:
    """Parse C-style decision text into an :data:`Expr`.

    Precedence is ``!`` over ``&&`` over ``||``; ``"a && (!b || !c) && d || e"``
    becomes ``Or(And(a, Or(!b, !c), d), e)``.
    """
    return _Parser(text).parse()


# -- rendering --------------------------------------------------------------

def render(e: Expr) -> str:
    """Canonical text form; ``parse(render(e)) == e`` for every tree."""
    if isinstance(e, Var):
        return e.name
    if isinstance(e, Not):
        inner = render(e.child)
        return "!" + (inner if isinstance(e.child, (Var, Not)) else f"({inner})")
    if isinstance(e, And):
        return " && ".join(f"({render(c)})" if isinstance(c, Or) else render(c) for c in e.children)
    return " || ".join(render(c) for c in e.children)


# -- structure --------------------------------------------------------------

def leaves(e: Expr) -> Iterator[Var]:
    """Variable leaves, left to right."""
    if isinstance(e, Var):
        yield e
    elif isinstance(e, Not):
        yield from leaves(e.child)
    else:
        for c in e.children:
            yield from leaves(c)


def operand_count(e: Expr) -> int:
    return sum(1 for _ in leaves(e))


@dataclass(frozen=True)
class VarOrder:
    """Condition names in order of first appearance."""

    names: tuple[str, ...]

    def __post_init__(self):
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate names in VarOrder")

    def __len__(self):
        return len(self.names)

    def __iter__(self):
        return iter(self.names)

    def index(self, name: str) -> int:
        return self.names.index(name)


def variables(e: Expr) -> VarOrder:
    seen: dict[str, None] = {}
    for leaf in leaves(e):
        seen.setdefault(leaf.name, None)
    return VarOrder(tuple(seen))


def validate_sbe(e: Expr) -> None:
    """Raise :class:`CoupledCondition` unless every condition occurs exactly once."""
    counts = Counter(leaf.name for leaf in leaves(e))
    for name, count in counts.items():
        if count > 1:
            raise CoupledCondition(name, count)


def is_sbe(e: Expr) -> bool:
    try:
        validate_sbe(e)
    except CoupledCondition:
        return False
    return True


def is_nnf(e: Expr) -> bool:
    if isinstance(e, Var):
        return True
    if isinstance(e, Not):
        return isinstance(e.child, Var)
    return all(is_nnf(c) for c in e.children)


# -- evaluation -------------------------------------------------------------

def evaluate(e: Expr, a: Assignment) -> bool:
    """Evaluate without short-circuiting; every condition must be assigned."""
    if isinstance(e, Var):
        try:
            return bool(a[e.name])
        except KeyError:
            raise MissingVariable(e.name) from None
    if isinstance(e, Not):
        return not evaluate(e.child, a)
    results = [evaluate(c, a) for c in e.children]
    return all(results) if isinstance(e, And) else any(results)


def evaluate_matrix(e: Expr, values: np.ndarray, order: VarOrder | Sequence[str]) -> np.ndarray:
    """Vectorised :func:`evaluate` over the rows of a boolean matrix.

    ``values[:, j]`` holds the value of condition ``order[j]``.
    """
    values = np.asarray(values, dtype=bool)
    if values.ndim != 2:
        raise ValueError("values must be a 2-D array")
    column = {name: j for j, name in enumerate(order)}

    def walk(node: Expr) -> np.ndarray:
        if isinstance(node, Var):
            if node.name not in column:
                raise MissingVariable(node.name)
            return values[:, column[node.name]]
        if isinstance(node, Not):
            return ~walk(node.child)
        parts = [walk(c) for c in node.children]
        reduce = np.logical_and if isinstance(node, And) else np.logical_or
        return reduce.reduce(parts, axis=0)

    return walk(e).copy()


def all_assignments(n: int) -> np.ndarray:
    """The ``2**n`` rows of a truth table; row ``r`` encodes ``r`` MSB-first."""
    r = np.arange(2**n, dtype=np.int64)[:, None]
    shifts = np.arange(n - 1, -1, -1, dtype=np.int64)[None, :]
    return ((r >> shifts) & 1).astype(bool)


def truth_table(e: Expr, order: VarOrder | None = None) -> tuple[np.ndarray, np.ndarray]:
    """All assignments of ``e``'s conditions and the decision for each."""
    order = variables(e) if order is None else order
    rows = all_assignments(len(order))
    return rows, evaluate_matrix(e, rows, order)


def assignments_to_matrix(tests: Sequence[Assignment], order: VarOrder | Sequence[str]) -> np.ndarray:
    out = np.zeros((len(tests), len(order)), dtype=bool)
    for i, a in enumerate(tests):
        for j, name in enumerate(order):
            try:
                out[i, j] = bool(a[name])
            except KeyError:
                raise MissingVariable(name) from None
    return out
