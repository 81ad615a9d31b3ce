"""Unique-cause and masking MC/DC checkers, plus an exhaustive minimal-set oracle.

Nothing here depends on how test sets are generated: every check works on
plain assignments and the expression's truth function.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import TooLarge, UnknownVariable
from .expr import Assignment, Expr, all_assignments, assignments_to_matrix, evaluate, evaluate_matrix, variables

UNIQUE_CAUSE = "unique-cause"
MASKING = "masking"
CRITERIA = (UNIQUE_CAUSE, MASKING)


def boolean_difference(e: Expr, c: str, a: Assignment) -> bool:
    """``F(a) xor F(a with c toggled)``: does ``c`` alone decide the outcome at ``a``?"""
    if c not in variables(e).names:
        raise UnknownVariable(c)
    toggled = dict(a)
    toggled[c] = not a[c]
    return evaluate(e, a) != evaluate(e, toggled)


def _difference_matrix(e: Expr, values: np.ndarray, order) -> np.ndarray:
    """``out[r, j]`` is the boolean difference of condition ``j`` at row ``r``."""
    base = evaluate_matrix(e, values, order)
    out = np.empty(values.shape, dtype=bool)
    for j in range(values.shape[1]):
        flipped = values.copy()
        flipped[:, j] = ~flipped[:, j]
        out[:, j] = evaluate_matrix(e, flipped, order) != base
    return out


@dataclass(frozen=True)
class CoverageReport:
    criterion: str
    conditions: tuple[str, ...]
    pairs: dict[str, tuple[int, int] | None]

    @property
    def covered(self) -> int:
        return sum(p is not None for p in self.pairs.values())

    @property
    def total(self) -> int:
        return len(self.conditions)

    @property
    def percentage(self) -> float:
        return 100.0 * self.covered / self.total if self.total else 100.0

    @property
    def complete(self) -> bool:
        return self.covered == self.total

    def summary(self) -> str:
        pct = self.percentage
        text = f"{pct:.0f}" if pct == int(pct) else f"{pct:.1f}"
        return f"{text}% ({self.covered}/{self.total})"

    def format(self) -> str:
        width = max([len(c) for c in self.conditions] + [9])
        lines = [f"{'condition':<{width}}  pair (rows, 1-based)"]
        for c in self.conditions:
            pair = self.pairs[c]
            shown = "-" if pair is None else f"{pair[0] + 1}, {pair[1] + 1}"
            lines.append(f"{c:<{width}}  {shown}")
        lines.append(f"{self.criterion}: {self.summary()}")
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {
            "criterion": self.criterion,
            "covered": self.covered,
            "total": self.total,
            "percentage": self.percentage,
            "pairs": {c: (list(p) if p is not None else None) for c, p in self.pairs.items()},
        }


def _prepare(e: Expr, tests: Sequence[Assignment]):
    order = variables(e)
    values = assignments_to_matrix(tests, order)
    return order, values, evaluate_matrix(e, values, order)


def _first_pair(mask: np.ndarray) -> tuple[int, int] | None:
    hits = np.argwhere(np.triu(mask, k=1))
    if len(hits) == 0:
        return None
    x, y = hits[0]
    return int(x), int(y)


def _unique_cause_masks(values: np.ndarray, outcomes: np.ndarray) -> np.ndarray:
    differs = values[:, None, :] != values[None, :, :]
    n_diff = differs.sum(axis=2)
    flips = outcomes[:, None] != outcomes[None, :]
    # exactly one coordinate differs, and it is coordinate j
    return differs & ((n_diff == 1) & flips)[:, :, None]


def unique_cause_pair(e: Expr, tests: Sequence[Assignment], c: str) -> tuple[int, int] | None:
    """Smallest ``(x, y)``, ``x < y``, forming a unique-cause independence pair for ``c``."""
    order, values, outcomes = _prepare(e, tests)
    if c not in order.names:
        raise UnknownVariable(c)
    return _first_pair(_unique_cause_masks(values, outcomes)[:, :, order.index(c)])


def unique_cause_coverage(e: Expr, tests: Sequence[Assignment]) -> CoverageReport:
    order, values, outcomes = _prepare(e, tests)
    masks = _unique_cause_masks(values, outcomes)
    pairs = {name: _first_pair(masks[:, :, j]) for j, name in enumerate(order)}
    return CoverageReport(UNIQUE_CAUSE, order.names, pairs)


def masking_coverage(e: Expr, tests: Sequence[Assignment]) -> CoverageReport:
    """Pairs where ``c`` differs, the outcome differs and ``c`` is not masked at either row."""
    order, values, outcomes = _prepare(e, tests)
    bd = _difference_matrix(e, values, order)
    differs = values[:, None, :] != values[None, :, :]
    flips = (outcomes[:, None] != outcomes[None, :])[:, :, None]
    masks = differs & flips & bd[:, None, :] & bd[None, :, :]
    pairs = {name: _first_pair(masks[:, :, j]) for j, name in enumerate(order)}
    return CoverageReport(MASKING, order.names, pairs)


def coverage(e: Expr, tests: Sequence[Assignment], criterion: str = UNIQUE_CAUSE) -> CoverageReport:
    if criterion == UNIQUE_CAUSE:
        return unique_cause_coverage(e, tests)
    if criterion == MASKING:
        return masking_coverage(e, tests)
    raise ValueError(f"unknown criterion {criterion!r}; choose from {CRITERIA}")


# -- exhaustive oracle ------------------------------------------------------

@dataclass(frozen=True)
class OracleResult:
    size: int
    witness: tuple[dict[str, bool], ...]
    criterion: str
    subsets_checked: int


def _pair_masks(e: Expr, criterion: str) -> tuple[list[np.ndarray], np.ndarray]:
    """For each condition, bitmasks (over truth-table rows) of every valid pair."""
    order = variables(e)
    n = len(order)
    rows = all_assignments(n)
    out = evaluate_matrix(e, rows, order)
    per_condition = []
    idx = np.arange(2**n)
    for j in range(n):
        bit = 1 << (n - 1 - j)
        if criterion == UNIQUE_CAUSE:
            lo = idx[(idx & bit) == 0]
            hi = lo | bit
            keep = out[lo] != out[hi]
            xs, ys = lo[keep], hi[keep]
        else:
            flipped = rows.copy()
            flipped[:, j] = ~flipped[:, j]
            bd = evaluate_matrix(e, flipped, order) != out
            xs, ys = np.nonzero(
                (rows[:, None, j] != rows[None, :, j])
                & (out[:, None] != out[None, :])
                & bd[:, None]
                & bd[None, :]
            )
            keep = xs < ys
            xs, ys = xs[keep], ys[keep]
        masks = (np.uint64(1) << xs.astype(np.uint64)) | (np.uint64(1) << ys.astype(np.uint64))
        per_condition.append(masks)
    return per_condition, rows


def _subsets(n_rows: int, k: int):
    """All ``k``-subsets of ``range(n_rows)`` as uint64 bitmasks, lexicographic by top bit."""
    masks = np.zeros(1, dtype=np.uint64)
    top = np.full(1, -1, dtype=np.int64)
    for _ in range(k):
        new_masks, new_top = [], []
        for j in range(n_rows):
            sel = top < j
            if sel.any():
                new_masks.append(masks[sel] | np.uint64(1 << j))
                new_top.append(np.full(int(sel.sum()), j, dtype=np.int64))
        masks = np.concatenate(new_masks) if new_masks else np.zeros(0, dtype=np.uint64)
        top = np.concatenate(new_top) if new_top else np.zeros(0, dtype=np.int64)
    return masks


def brute_force_minimal(e: Expr, criterion: str = UNIQUE_CAUSE, max_n: int = 5) -> OracleResult:
    """Smallest covering subset of the full truth table, by exhaustive enumeration.

    Subset sizes are tried upward from 1; every subset of each size is checked
    before moving on, so the first size with a covering subset is minimal.
    ``max_n`` guards against the combinatorial blow-up; 6 is the hard ceiling
    imposed by the 64-bit row masks.
    """
    if criterion not in CRITERIA:
        raise ValueError(f"unknown criterion {criterion!r}")
    order = variables(e)
    n = len(order)
    if n > max_n or n > 6:
        raise TooLarge(n, min(max_n, 6))
    pair_masks, rows = _pair_masks(e, criterion)
    if any(len(m) == 0 for m in pair_masks):
        raise ValueError(f"no {criterion} independence pair exists for some condition")
    checked = 0
    for k in range(1, 2**n + 1):
        candidates = _subsets(2**n, k)
        checked += len(candidates)
        for masks in pair_masks:
            if len(candidates) == 0:
                break
            hit = np.zeros(len(candidates), dtype=bool)
            for m in masks:
                hit |= (candidates & m) == m
            candidates = candidates[hit]
        if len(candidates):
            best = int(candidates.min())
            members = [r for r in range(2**n) if best >> r & 1]
            witness = tuple(dict(zip(order.names, map(bool, rows[r]))) for r in members)
            return OracleResult(k, witness, criterion, checked)
    raise ValueError(f"no subset achieves {criterion} coverage")  # pragma: no cover
