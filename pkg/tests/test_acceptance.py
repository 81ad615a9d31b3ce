"""Acceptance criteria, one test each.

Every test records a PASS/FAIL line; the lines are printed as they happen
(visible with ``-s``) and again in the terminal summary.
"""

import time

import pytest

from sbe_mcdc.bench import run_bench
from sbe_mcdc.corpus import CASE1_COLUMNS, CASE1_ALPHA_HEADER, get_case, load_corpus, case1_assignments
from sbe_mcdc.coverage import brute_force_minimal, masking_coverage, unique_cause_coverage
from sbe_mcdc.errors import SbeError
from sbe_mcdc.expr import evaluate_matrix, all_assignments, parse, render, variables
from sbe_mcdc.fuzz import random_corpus
from sbe_mcdc.generator import generate, to_assignments
from sbe_mcdc.normalize import NormalizedExpr, normalize, pushdown_not
from sbe_mcdc.planner import relation_table

from .helpers import ACCEPTANCE_LINES

EXPECTED_CASES = [24, 6, 21, 22, 18, 11, 16, 21, 18, 14, 13, 19, 12, 10, 9]
CASE1_RT = "RT(F,T,T,T,F,F,T,T,F,F,T,T,T,T,F,T,T,F,T,T,T,F)"
FUZZ_COUNT, FUZZ_SEED = 1000, 20240601
ORACLE_COUNT, ORACLE_SEED = 240, 7


def record(number: int, title: str, ok: bool, detail: str) -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title} ({detail})"
    ACCEPTANCE_LINES.append(line)
    print(line)


@pytest.fixture(scope="module")
def corpus_tables():
    out = []
    for case in load_corpus():
        e = parse(case.text)
        out.append((case, e, generate(normalize(e))))
    return out


@pytest.fixture(scope="module")
def fuzz_corpus():
    return random_corpus(FUZZ_COUNT, 2, 12, seed=FUZZ_SEED)


@pytest.fixture(scope="module")
def fuzz_tables(fuzz_corpus):
    tables, failures = [], []
    for e in fuzz_corpus:
        try:
            tables.append((e, generate(normalize(e))))
        except SbeError as exc:
            failures.append(f"{render(e)}: {exc}")
    return tables, failures


def test_1_corpus_sizes(corpus_tables):
    sizes = [len(t) for _, _, t in corpus_tables]
    ok = sizes == EXPECTED_CASES
    record(1, "corpus case counts equal N+1", ok, f"got {sizes}")
    assert ok


def test_2_corpus_coverage(corpus_tables):
    summaries = []
    for case, e, t in corpus_tables:
        report = unique_cause_coverage(e, to_assignments(t, variables(e)))
        summaries.append((case.id, report.covered, report.total))
    bad = [s for s in summaries if s[1] != s[2]]
    ok = not bad and all(total == case.n for (case, _, _), (_, _, total) in zip(corpus_tables, summaries))
    record(2, "corpus unique-cause coverage 100%", ok, f"{15 - len(bad)}/15 complete")
    assert ok


def test_3_reference_vectors():
    e = parse(get_case(1).text)
    report = unique_cause_coverage(e, case1_assignments(CASE1_COLUMNS))
    printed = unique_cause_coverage(e, case1_assignments(CASE1_ALPHA_HEADER))
    ok = report.complete and len(case1_assignments()) == 24
    record(3, "reference 24 vectors reach 100% unique-cause", ok,
           f"{report.summary()} with normalized literal column order; "
           f"{printed.summary()} if columns are read as a..w")
    assert ok


def test_4_relation_table_golden():
    small = relation_table(NormalizedExpr.from_nnf(pushdown_not(parse("(A && B) && (C || D)"))))
    big = relation_table(normalize(parse(get_case(1).text)))
    ok = str(small) == "RT(T,T,F)" and str(big) == CASE1_RT
    record(4, "relation table golden values", ok, f"{small}; case 1 {big}")
    assert ok


def test_5_minimality_oracle():
    exprs = random_corpus(ORACLE_COUNT, 2, 5, seed=ORACLE_SEED)
    mismatches = []
    for e in exprs:
        n = len(variables(e))
        size = brute_force_minimal(e).size
        generated = len(generate(normalize(e)))
        if not size == n + 1 == generated:
            mismatches.append((render(e), size, generated))
    ok = not mismatches and len(exprs) >= 200
    record(5, "oracle minimum = N+1 = generated size", ok,
           f"{len(exprs) - len(mismatches)}/{len(exprs)} agree")
    assert ok, mismatches[:5]


def test_6_normalization_equivalence(fuzz_corpus):
    bad = []
    for e in fuzz_corpus:
        order = variables(e)
        values = all_assignments(len(order)).astype(bool)
        if not (evaluate_matrix(e, values, order) == evaluate_matrix(normalize(e).expr, values, order)).all():
            bad.append(render(e))
    ok = not bad and len(fuzz_corpus) >= 1000
    record(6, "normalized form equivalent on all 2^N assignments", ok,
           f"{len(fuzz_corpus) - len(bad)}/{len(fuzz_corpus)} equivalent")
    assert ok, bad[:5]


def test_7_fuzz_generation_validity(fuzz_corpus, fuzz_tables):
    tables, failures = fuzz_tables
    invalid = list(failures)
    for e, t in tables:
        n = len(variables(e))
        distinct = len({tuple(r) for r in t.cells.tolist()})
        report = unique_cause_coverage(e, to_assignments(t, variables(e)))
        if t.shape != (n + 1, n) or distinct != n + 1 or not report.complete:
            invalid.append(render(e))
    ok = not invalid
    record(7, "fuzzed tables have N+1 distinct rows and 100% coverage", ok,
           f"{len(fuzz_corpus) - len(invalid)}/{len(fuzz_corpus)} valid")
    assert ok, invalid[:5]


def test_8_masking_dominance(fuzz_tables):
    tables, _ = fuzz_tables
    bad = []
    for e, t in tables:
        tests = to_assignments(t, variables(e))
        if unique_cause_coverage(e, tests).complete and not masking_coverage(e, tests).complete:
            bad.append(render(e))
    ok = not bad
    record(8, "unique-cause complete implies masking complete", ok,
           f"{len(tables) - len(bad)}/{len(tables)} hold")
    assert ok, bad[:5]


def test_9_bench_runtime():
    start = time.perf_counter()
    report = run_bench()
    elapsed = time.perf_counter() - start
    ok = report.passed and elapsed < 5.0
    record(9, "15-case bench under 5 s", ok, f"{report.n_passed}/15 pass in {elapsed:.3f}s")
    assert ok
