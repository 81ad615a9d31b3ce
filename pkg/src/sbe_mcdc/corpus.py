"""Benchmark decisions drawn from TCAS-II logic, plus reference test vectors."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class BenchmarkCase:
    id: int
    text: str
    n: int
    vectorcast_cases: int  # reference only, never asserted

    @property
    def expected_cases(self) -> int:
        return self.n + 1


_ROWS = [
    (1,
     "!(a && b) && (c && !d && !e || !f && g && !h || !i && !j && !k) && (l && m && "
     "(n || o) && p || q && (r || s) && !t || u && (v || w))",
     23, 27),
    (2, "a && (!b || !c) && d || e", 5, 8),
    (3,
     "a && (!b || !c || d && e && !(!f && g && h && !i || !j && k && l) && !(!m && n && o "
     "&& p || !q && !r && s)) || t",
     20, 26),
    (4,
     "(!a && b || c && !d) && !(e && f) && !(g && h) && !(i && j) && ((k && l || m && n) "
     "&& o && (!p || !q && !r || !s && (!t || !u)))",
     21, 28),
    (5,
     "(!a && b || c && !d) && !(e && f) && !(g && h) && ((i && j || k && l) && m "
     "&& (n && o || !p && q))",
     17, 22),
    (6, "!(a && b) && (!c && d && !e && !f && (g && h || !i && j))", 10, 13),
    (7, "a && !b && !c && d && !e && f && (g || !h && (i || j)) && !(k && l || !m && n || o)", 15, 17),
    (8,
     "a && !b && !c && !((d && (e || !f && (g || h))) || i && (j || !k && (l || m)) "
     "&& !n && !o) && !(p && q || !r && s && !t)",
     20, 24),
    (9,
     "a && !b && !c && (d && (e || !f && (g || h)) && (!i && !j || k ) || !l) && "
     "(m && n || !o && p && !q)",
     17, 20),
    (10, "a || b || c || !d && !e && f && g && !h && !i || j && (k || l) && !m", 13, 16),
    (11, "a && b && (c || d) && e || f && (g || h) && !i || j && (k || l)", 12, 15),
    (12,
     "a && (( b || c || d) && e || f && g || h && (i || j || k || l)) || (m || n) "
     "&& (o || p || q) && r",
     18, 22),
    (13, "(a && b || c && d) && e && (f || (g && (h && i || j && k)))", 11, 15),
    (14, "(a && b || c && d) && e && (f && g || !h && i)", 9, 12),
    (15, "!a && b && !c && !d && (e && f || !g && h)", 8, 10),
]

CORPUS: tuple[BenchmarkCase, ...] = tuple(BenchmarkCase(*row) for row in _ROWS)


def load_corpus() -> list[BenchmarkCase]:
    return list(CORPUS)


def get_case(case_id: int) -> BenchmarkCase:
    for case in CORPUS:
        if case.id == case_id:
            return case
    raise KeyError(f"no benchmark case {case_id}")


# Reference 24-vector test set for case 1 (1 = true).  Columns follow the
# normalized literal order below; read alphabetically (a..w) the same
# values show almost no independence pairs.
CASE1_ALPHA_HEADER = tuple("abcdefghijklmnopqrstuvw")
CASE1_COLUMNS = ("n", "o", "m", "l", "p", "r", "s", "q", "t", "v", "w", "u",
                  "c", "d", "e", "f", "g", "h", "i", "j", "k", "a", "b")

CASE1_VECTORS = tuple(
    tuple(int(ch) for ch in line)
    for line in """
01111001000110011010001
00111001000110011010001
10111001000110011010001
01011001000110011010001
01101001000110011010001
01110001000110011010001
01110011000110011010001
01110101000110011010001
01110010000110011010001
01110011100110011010001
01110011101110011010001
01110011110110011010001
01110011101010011010001
01110011101111011010001
01110011101100011010001
01110011101110111010001
01110011101110101010001
01110011101110100010001
01110011101110101110001
01110011101110101100001
01110011101110101101001
01110011101110101100101
01110011101110101100011
01110011101110101100010
""".split()
)


def case1_assignments(header=CASE1_COLUMNS) -> list[dict[str, bool]]:
    """The reference vectors as assignments, reading columns under ``header``."""
    return [dict(zip(header, map(bool, row))) for row in CASE1_VECTORS]
