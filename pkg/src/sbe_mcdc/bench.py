"""End-to-end benchmark runs and the CSV / C-source file formats.

CSV layout: a header of condition names in first-appearance order followed
by ``decision``; one line per test with ``0``/``1`` cells, LF endings, no
quoting.
"""

from __future__ import annotations

import csv
import json
import re
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Iterable, Sequence

from .corpus import BenchmarkCase, load_corpus
from .coverage import unique_cause_coverage
from .errors import DecisionMismatch, HeaderMismatch, NonBooleanCell, SbeError
from .expr import Assignment, Expr, IDENT_RE, evaluate, parse, render, validate_sbe, variables
from .generator import TestTable, generate, to_assignments
from .normalize import normalize

DECISION = "decision"


@dataclass(frozen=True)
class CaseResult:
    id: int
    n: int | None
    expected_n: int
    cases: int | None
    expected_cases: int
    coverage: float | None
    seconds: float
    vectorcast_cases: int
    error: str | None = None

    @property
    def passed(self) -> bool:
        return (
            self.error is None
            and self.n == self.expected_n
            and self.cases == self.expected_cases
            and self.coverage == 100.0
        )


@dataclass(frozen=True)
class BenchReport:
    results: tuple[CaseResult, ...]
    seconds: float

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def n_passed(self) -> int:
        return sum(r.passed for r in self.results)

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "n_passed": self.n_passed,
            "n_cases": len(self.results),
            "seconds": self.seconds,
            "cases": [dict(asdict(r), passed=r.passed) for r in self.results],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def format(self) -> str:
        lines = [f"{'SBE':>3} {'N':>3} {'cases':>5} {'N+1':>4} {'coverage':>9} {'ms':>8}  status"]
        for r in self.results:
            cov = "-" if r.coverage is None else f"{r.coverage:.0f}%"
            status = "ok" if r.passed else f"FAIL {r.error or ''}".rstrip()
            lines.append(
                f"{r.id:>3} {r.n if r.n is not None else '-':>3} {r.cases if r.cases is not None else '-':>5} "
                f"{r.expected_cases:>4} {cov:>9} {1000 * r.seconds:>8.2f}  {status}"
            )
        lines.append(f"{self.n_passed}/{len(self.results)} pass in {self.seconds:.3f}s")
        return "\n".join(lines)


def run_case(case: BenchmarkCase) -> CaseResult:
    """Parse, validate, generate and self-verify one case; errors become a failed result."""
    start = time.perf_counter()
    n = cases = cov = None
    error = None
    try:
        e = parse(case.text)
        validate_sbe(e)
        n = len(variables(e))
        table = generate(normalize(e))
        cases = len(table)
        cov = unique_cause_coverage(e, to_assignments(table)).percentage
    except SbeError as exc:
        error = f"{type(exc).__name__}: {exc}"
    return CaseResult(
        id=case.id,
        n=n,
        expected_n=case.n,
        cases=cases,
        expected_cases=case.expected_cases,
        coverage=cov,
        seconds=time.perf_counter() - start,
        vectorcast_cases=case.vectorcast_cases,
        error=error,
    )


def run_bench(cases: Iterable[BenchmarkCase] | None = None, workers: int = 1) -> BenchReport:
    """Run every case; results come back ordered by case id."""
    cases = load_corpus() if cases is None else list(cases)
    start = time.perf_counter()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run_case, cases))
    else:
        results = [run_case(c) for c in cases]
    results.sort(key=lambda r: r.id)
    return BenchReport(tuple(results), time.perf_counter() - start)


# -- CSV ------------------------------------------------------------------

def emit_csv(
    expr: Expr,
    tests: TestTable | Sequence[Assignment],
    path: str | Path,
    order: Sequence[str] | None = None,
) -> Path:
    """Write tests as 0/1 CSV with a trailing ``decision`` column."""
    order = list(variables(expr) if order is None else order)
    if isinstance(tests, TestTable):
        tests = to_assignments(tests, order)
    path = Path(path)
    lines = [",".join([*order, DECISION])]
    for a in tests:
        cells = [str(int(bool(a[name]))) for name in order]
        cells.append(str(int(evaluate(expr, a))))
        lines.append(",".join(cells))
    try:
        path.write_text("\n".join(lines) + "\n", encoding="utf-8", newline="\n")
    except OSError as exc:
        raise OSError(f"cannot write {path}: {exc.strerror}") from exc
    return path


def import_csv(path: str | Path, expr: Expr) -> list[dict[str, bool]]:
    """Read a test CSV; a ``decision`` column, when present, must match the expression."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise OSError(f"cannot read {path}: {exc.strerror}") from exc
    reader = csv.reader(text.splitlines())
    try:
        header = [h.strip() for h in next(reader)]
    except StopIteration:
        raise HeaderMismatch(list(variables(expr))) from None
    missing = [name for name in variables(expr) if name not in header]
    if missing:
        raise HeaderMismatch(missing)
    out = []
    for row_no, row in enumerate(reader, start=1):
        if not row or all(not cell.strip() for cell in row):
            continue
        values = {}
        for col, cell in zip(header, row):
            cell = cell.strip()
            if cell not in ("0", "1"):
                raise NonBooleanCell(row_no, col, cell)
            values[col] = cell == "1"
        if len(row) < len(header):
            raise NonBooleanCell(row_no, header[len(row)], "")
        a = {name: values[name] for name in variables(expr)}
        if DECISION in values:
            actual = evaluate(expr, a)
            if values[DECISION] != actual:
                raise DecisionMismatch(row_no, values[DECISION], actual)
        out.append(a)
    return out


# -- C source ---------------------------------------------------------------

def c_source(expr: Expr, name: str) -> str:
    if not IDENT_RE.fullmatch(name):
        raise ValueError(f"{name!r} is not a C identifier")
    validate_sbe(expr)
    params = ", ".join(f"int {v}" for v in variables(expr))
    return (
        f"/* decision under test: {render(expr)} */\n"
        f"int {name}({params})\n"
        "{\n"
        f"    if ({render(expr)}) {{\n"
        "        return 1;\n"
        "    }\n"
        "    return 0;\n"
        "}\n"
    )


def emit_c_source(expr: Expr, name: str, path: str | Path) -> Path:
    """Write a C translation unit whose function returns the decision as 0/1."""
    path = Path(path)
    try:
        path.write_text(c_source(expr, name), encoding="utf-8", newline="\n")
    except OSError as exc:
        raise OSError(f"cannot write {path}: {exc.strerror}") from exc
    return path


_IF_RE = re.compile(r"\bif\s*\(")


def extract_condition(source: str) -> str:
    """Text inside the first ``if (...)`` of a C source string."""
    m = _IF_RE.search(source)
    if m is None:
        raise ValueError("no if statement found")
    depth = 1
    i = m.end()
    while depth:
        if i >= len(source):
            raise ValueError("unbalanced parentheses in if condition")
        depth += {"(": 1, ")": -1}.get(source[i], 0)
        i += 1
    return source[m.end() : i - 1]
