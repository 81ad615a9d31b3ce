"""
The 15-decision benchmark
-------------------------
Every decision is parsed, normalized, generated and then re-checked.
The CSV and C files are the hand-off format for an external test harness.
"""

import tempfile
from pathlib import Path

from sbe_mcdc import generate, normalize, parse
from sbe_mcdc.bench import emit_c_source, emit_csv, import_csv, run_bench
from sbe_mcdc.corpus import get_case

report = run_bench()
print(report.format())

# Compare against the reference tool counts kept with the corpus
for r in report.results:
    print(f"decision {r.id:2d}: {r.cases} tests here, {r.vectorcast_cases} from the reference tool")

out = Path(tempfile.mkdtemp())
e = parse(get_case(15).text)
csv_path = emit_csv(e, generate(normalize(e)), out / "sbe15.csv")
c_path = emit_c_source(e, "sbe15", out / "sbe15.c")
print(csv_path.read_text())
print(c_path.read_text())
print(len(import_csv(csv_path, e)), "rows read back")
