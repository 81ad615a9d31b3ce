"""Construction of the N+1 row unique-cause test table.

Every block (B-form, S-form or result block) owns a small table whose first
row is its *anchor*.  Blocks joined by an operator are laid out side by side
so that they share one row made of all their anchors; each block's other rows
are then completed with the anchors of its siblings.  When every anchor holds
the operator's non-controlling value (true under AND, false under OR), the
siblings never mask each other and every independence pair inside a block
survives the composition, so ``1 + sum(rows_i - 1)`` rows cover ``N``
conditions.

Anchors are picked from the relation table first.  When that choice would
mask a sibling the table is repaired by moving to the next candidate row in
base-pattern priority order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field, replace
from typing import Sequence

import numpy as np

from .errors import CompositionConflict, GenerationFailed, InvalidSlice, SizeError
from .expr import And, Expr, Not, Or, Var, VarOrder, evaluate_matrix, make_group, variables
from .normalize import Literal, NormalizedExpr, normalize
from .planner import (
    AND,
    OR,
    BForm,
    FormTree,
    RelationTable,
    ResultBlock,
    SForm,
    decompose,
    non_controlling,
    relation_table,
    rt_slice,
)

UNSET = -1

T, F = True, False


@dataclass(frozen=True)
class BasePattern:
    op: str
    rows: tuple[tuple[bool, bool], ...]


_BASE = {
    AND: BasePattern(AND, ((T, T), (T, F), (F, T))),
    OR: BasePattern(OR, ((F, F), (F, T), (T, F))),
}


def base_patterns(op: str) -> BasePattern:
    """The fixed three-row table for a two-literal AND or OR, in priority order."""
    return _BASE[op]


def select_initial_pattern(b: BForm, rt_slice: Sequence[bool]) -> list[tuple[bool, bool]]:
    """Base-pattern rows for ``b`` with ``rt_slice`` moved to the front."""
    first = tuple(bool(v) for v in rt_slice)
    rows = base_patterns(b.op).rows
    if first not in rows:
        raise InvalidSlice(f"{first} is not a base pattern row for {b.op.upper()}")
    return [first] + [r for r in rows if r != first]


def _literal_expr(lit: Literal) -> Expr:
    return Not(Var(lit.name)) if lit.negated else Var(lit.name)


_KIND = {AND: And, OR: Or}


@dataclass(frozen=True, eq=False)
class TestTable:
    """Rows of literal values over a contiguous run of literal columns.

    ``cells`` holds 0/1, or ``UNSET`` while a layout is being filled.  Row 0
    is the anchor.  ``block`` is the NNF sub-expression the rows decide;
    ``parts`` and ``op`` record how a composed table was assembled.
    """

    __test__ = False  # not a pytest class

    columns: tuple[Literal, ...]
    cells: np.ndarray
    block: Expr
    op: str | None = None
    parts: tuple["TestTable", ...] = ()
    kind: str = "block"
    form: FormTree | None = field(default=None, repr=False)

    def __post_init__(self):
        cells = np.array(self.cells, dtype=np.int8).reshape(-1, len(self.columns))
        cells.setflags(write=False)
        object.__setattr__(self, "cells", cells)

    @property
    def shape(self) -> tuple[int, int]:
        return self.cells.shape

    @property
    def complete(self) -> bool:
        return not (self.cells == UNSET).any()

    @property
    def rows(self) -> tuple[tuple[bool, ...], ...]:
        if not self.complete:
            raise ValueError("table has unassigned cells")
        return tuple(tuple(bool(v) for v in row) for row in self.cells)

    @property
    def anchor(self) -> tuple[int, ...]:
        return tuple(int(v) for v in self.cells[0])

    def outcomes(self) -> np.ndarray:
        """Decision value of ``block`` for each row."""
        negated = np.array([c.negated for c in self.columns], dtype=bool)
        values = self.cells.astype(bool) ^ negated
        return evaluate_matrix(self.block, values, [c.name for c in self.columns])

    def __len__(self):
        return self.cells.shape[0]

    def format(self) -> str:
        head = " ".join(f"{str(c):>4}" for c in self.columns)
        body = [
            " ".join(f"{'.' if v == UNSET else 'TF'[1 - v]:>4}" for v in row) for row in self.cells
        ]
        return "\n".join([head, *body])


def _form_table(form: BForm | SForm, rows: Sequence[Sequence[bool]]) -> TestTable:
    if isinstance(form, BForm):
        block = make_group(_KIND[form.op], [_literal_expr(form.left), _literal_expr(form.right)])
        kind = "B"
    else:
        block = _literal_expr(form.literal)
        kind = "S"
    return TestTable(form.literals, np.array(rows, dtype=np.int8), block, kind=kind, form=form)


def form_table(form: BForm | SForm, rt: RelationTable) -> TestTable:
    """Initial table for a B-form or S-form, anchored on its relation-table slice."""
    if isinstance(form, BForm):
        return _form_table(form, select_initial_pattern(form, rt_slice(form, rt)))
    (value,) = rt_slice(form, rt)
    return _form_table(form, [(value,), (not value,)])


# -- layout -----------------------------------------------------------------

def layout_tables(current: TestTable, nxt: TestTable, connector: str) -> TestTable:
    """Place ``nxt`` beside ``current`` sharing the anchor row; foreign cells stay UNSET.

    ``nxt``'s anchor goes on ``current``'s first row and its remaining rows
    are appended below the existing ones.
    """
    if current.op == connector and current.kind == "group":
        parts = current.parts + (nxt,)
    else:
        parts = (current, nxt)
    rows_cur, cols_cur = current.shape
    rows_nxt, cols_nxt = nxt.shape
    cells = np.full((rows_cur + rows_nxt - 1, cols_cur + cols_nxt), UNSET, dtype=np.int8)
    cells[:rows_cur, :cols_cur] = current.cells
    cells[0, cols_cur:] = nxt.cells[0]
    cells[rows_cur:, cols_cur:] = nxt.cells[1:]
    block = make_group(_KIND[connector], [current.block, nxt.block])
    return TestTable(current.columns + nxt.columns, cells, block, connector, parts, "group")


def fill_empty_regions(t: TestTable) -> TestTable:
    """Complete every UNSET cell with the anchor value of the part owning its column."""
    cells = np.array(t.cells)
    start = 0
    for part in t.parts:
        stop = start + len(part.columns)
        region = cells[:, start:stop]
        empty = region == UNSET
        region[empty] = np.broadcast_to(part.cells[0], region.shape)[empty]
        start = stop
    return replace(t, cells=cells)


def _glue(parts: Sequence[TestTable], connector: str) -> TestTable:
    table = parts[0]
    for part in parts[1:]:
        table = layout_tables(table, part, connector)
    return fill_empty_regions(table)


def find_conflict(t: TestTable) -> str | None:
    """Describe why a composed table is invalid, or return ``None``."""
    if not t.complete:
        return "table has unassigned cells"
    _, first = np.unique(t.cells, axis=0, return_index=True)
    if len(first) != len(t):
        dup = sorted(set(range(len(t))) - set(first.tolist()))[0]
        return f"row {dup + 1} duplicates an earlier row"
    if t.op is not None:
        want = non_controlling(t.op)
        for i, part in enumerate(t.parts):
            if bool(part.outcomes()[0]) != want:
                return (
                    f"block {i + 1} is anchored on a {'true' if not want else 'false'} row, "
                    f"so rows testing its siblings fail to flip the decision"
                )
    return None


def _checked(t: TestTable) -> TestTable:
    reason = find_conflict(t)
    if reason is not None:
        raise CompositionConflict(reason, t)
    return t


def compose_b_b(current: TestTable, nxt: BForm, rt: RelationTable, connector: str | None = None) -> TestTable:
    """Append a B-form: its pattern shares ``current``'s anchor row plus two fresh rows."""
    connector = nxt.op if connector is None else connector
    return compose_blocks(current, form_table(nxt, rt), connector)


def compose_b_s(current: TestTable, s: SForm, connector: str, rt: RelationTable) -> TestTable:
    """Append an S-form: its column is the connector's non-controlling value except in one fresh row."""
    return compose_blocks(current, form_table(s, rt), connector)


def compose_blocks(current: TestTable, nxt: TestTable, connector: str) -> TestTable:
    """Join two completed tables; raises :class:`CompositionConflict` on an invalid result."""
    return _checked(fill_empty_regions(layout_tables(current, nxt, connector)))


# -- exception handling -----------------------------------------------------

def _reordered(part: TestTable, order: Sequence[int]) -> TestTable:
    cells = part.cells[list(order)]
    if part.kind in ("B", "S"):
        return replace(part, cells=cells)
    # A re-anchored composite is kept as an opaque block.
    return TestTable(part.columns, cells, part.block, kind="block", form=part.form)


def anchor_candidates(part: TestTable, want: bool, rt: RelationTable) -> list[TestTable]:
    """Re-anchorings of ``part`` whose first row evaluates to ``want``, preferred first.

    The current anchor comes first when it already fits.  B-forms then try
    their base rows in priority order; other tables try their rows top down.
    """
    outcome = part.outcomes()
    rows = [tuple(r) for r in part.cells.tolist()]
    if part.kind == "B":
        priority = [tuple(int(v) for v in r) for r in base_patterns(part.form.op).rows]
        ordered = [rows[0]] + [r for r in priority if r != rows[0]]
        candidates = []
        for first in ordered:
            i = rows.index(first)
            if bool(outcome[i]) != want:
                continue
            rest = [rows.index(r) for r in priority if r != first]
            candidates.append(_reordered(part, [i, *rest]))
        return candidates
    candidates = []
    for i in range(len(rows)):
        if bool(outcome[i]) == want:
            candidates.append(_reordered(part, [i] + [j for j in range(len(rows)) if j != i]))
    return candidates


def handle_exception(t: TestTable, rt: RelationTable) -> TestTable:
    """Repair a composed table by re-anchoring its blocks.

    Candidate anchor combinations are tried in preference order; the first one
    giving a table without conflict wins.  Raises :class:`GenerationFailed` when
    no combination works.
    """
    if find_conflict(t) is None:
        return t
    if t.op is None or not t.parts:
        raise GenerationFailed(f"cannot repair an uncomposed table: {find_conflict(t)}")
    want = non_controlling(t.op)
    options = [anchor_candidates(p, want, rt) for p in t.parts]
    if not all(options):
        raise GenerationFailed("a block has no row with the required outcome")
    for combo in itertools.product(*options):
        table = _glue(combo, t.op)
        if find_conflict(table) is None:
            return table
    raise GenerationFailed(f"no anchor choice resolves: {find_conflict(t)}")


# -- driver -----------------------------------------------------------------

def build_table(tree: FormTree, rt: RelationTable) -> TestTable:
    """Compose the table for a decomposition, block by block."""
    if isinstance(tree, (BForm, SForm)):
        return form_table(tree, rt)
    op = tree.op
    current = build_table(tree.children[0], rt)
    for child in tree.children[1:]:
        try:
            if isinstance(child, BForm):
                current = compose_b_b(current, child, rt, op)
            elif isinstance(child, SForm):
                current = compose_b_s(current, child, op, rt)
            else:
                current = compose_blocks(current, build_table(child, rt), op)
        except CompositionConflict as exc:
            current = handle_exception(exc.table, rt)
    return replace(current, form=tree)


def generate(n) -> TestTable:
    """Build the ``(N+1) x N`` unique-cause table for an SBE.

    Accepts a :class:`NormalizedExpr`, or a raw expression which is normalized
    first.  The result is checked against :mod:`sbe_mcdc.coverage` before it is
    returned.
    """
    from .coverage import unique_cause_coverage

    n = n if isinstance(n, NormalizedExpr) else normalize(n)
    size = n.n
    if size < 2:
        raise SizeError(size)
    rt = relation_table(n)
    if size == 2:
        tree = decompose(n)
        table = _form_table(tree, base_patterns(tree.op).rows)
    else:
        table = build_table(decompose(n), rt)

    if table.shape != (size + 1, size):
        raise GenerationFailed(f"expected {size + 1}x{size} table, got {table.shape[0]}x{table.shape[1]}")
    reason = find_conflict(table)
    if reason is not None:
        raise GenerationFailed(reason)
    order = variables(n.expr)
    report = unique_cause_coverage(n.expr, to_assignments(table, order))
    if not report.complete:
        raise GenerationFailed(f"generated table covers only {report.summary()}")
    return table


def project_to_variables(t: TestTable, order: VarOrder | Sequence[str]) -> np.ndarray:
    """Variable values per row, columns in ``order``; negated literals are inverted."""
    if not t.complete:
        raise ValueError("table has unassigned cells")
    negated = np.array([c.negated for c in t.columns], dtype=bool)
    literal_values = t.cells.astype(bool) ^ negated
    position = {c.name: j for j, c in enumerate(t.columns)}
    return literal_values[:, [position[name] for name in order]]


def to_assignments(t: TestTable, order: VarOrder | Sequence[str] | None = None) -> list[dict[str, bool]]:
    order = [c.name for c in t.columns] if order is None else list(order)
    values = project_to_variables(t, order)
    return [dict(zip(order, map(bool, row))) for row in values]


def table_from_expr(e: Expr | str) -> tuple[NormalizedExpr, TestTable]:
    """Parse (if needed), normalize and generate in one call."""
    from .expr import parse

    if isinstance(e, str):
        e = parse(e)
    n = normalize(e)
    return n, generate(n)


__all__ = [
    "BasePattern",
    "TestTable",
    "UNSET",
    "anchor_candidates",
    "base_patterns",
    "build_table",
    "compose_b_b",
    "compose_b_s",
    "compose_blocks",
    "fill_empty_regions",
    "find_conflict",
    "form_table",
    "generate",
    "handle_exception",
    "layout_tables",
    "project_to_variables",
    "select_initial_pattern",
    "table_from_expr",
    "to_assignments",
]
