"""The refine-by-counterexample loop, end to end.

Start from a dataset of bipartite graphs only.  The engine proposes
"independence >= n - matching" for every connected graph, which bipartite
data can never refute.  The enumerator then finds the triangle as the
smallest counterexample, it joins the table, and the bound is gone for good.

Run with:  python3 demos/refine_loop_demo.py
"""

from tightbounds import (
    enumerate_connected_graphs,
    figure1_bipartite_table,
    red_burton,
    render_run,
    write_on_the_wall,
)
from tightbounds.rationals import format_rational
from tightbounds.table import Hypothesis

table = figure1_bipartite_table()
print(f"Starting table: {', '.join(table.ids)} (all bipartite)\n")

run = write_on_the_wall(table, ["independence_number"])
print(render_run(run))

overreach = next(
    c for c in run.conjectures
    if c.direction == "lower" and c.hypothesis == Hypothesis({"connected"})
)
print("\nSuspicious over-generalization (true only on bipartite data):")
print(" ", render_run(run).splitlines()[[*run.conjectures].index(overreach)])

new_table, report = red_burton(table, overreach, enumerate_connected_graphs(6))
assert report is not None
print(
    f"\nSmallest counterexample: {report.witness_id} on {report.order} vertices, "
    f"edges {sorted(report.witness.edges)}"
)
print(
    f"  independence_number = {format_rational(report.lhs)}"
    f" < bound {format_rational(report.rhs)}"
)

rerun = write_on_the_wall(new_table, ["independence_number"])
print(f"\nAfter appending it, the rerun ({len(rerun.conjectures)} conjectures):\n")
print(render_run(rerun))
assert all(c.signature() != overreach.signature() for c in rerun.conjectures)
print("\nThe refuted bound cannot be generated again.")
