"""Conjecturing over positive integers instead of graphs.

Builds the number-theory table for 1..100, runs the same pipeline with a
digit-sum target, then evaluates the published fifty-conjecture catalog over
1..1000 and prints the touch/violation report.

Run with:  python3 demos/integer_pipeline_demo.py
"""

from tightbounds import build_integer_dataset, render_run, write_on_the_wall
from tightbounds.number_conjectures import evaluate_conjectures, render_report
from tightbounds.table import Hypothesis, build_integer_table

table = build_integer_table(build_integer_dataset(1, 100))
run = write_on_the_wall(
    table,
    ["sum_of_digits"],
    hypotheses=[Hypothesis({"prime"}), Hypothesis({"harshad"}), Hypothesis({"even"})],
    limit=12,
)
print("Top conjectures about digit sums over 1..100:\n")
print(render_run(run))

print("\nEvaluating the fifty published integer conjectures over 1..1000")
print("(the generating range behind the catalog is unpublished, so this is")
print("a report, not a reproduction):\n")
reports = evaluate_conjectures(build_integer_dataset(1, 1000))
print(render_report(reports))
