"""Walk through the full graph pipeline on the built-in nine-graph dataset.

Run with:  python3 demos/graph_pipeline_demo.py
"""

from tightbounds import (
    figure1_table,
    make_all_upper_linear_conjectures,
    render_conjecture,
    render_equality,
    render_run,
    static_dalmatian,
    write_on_the_wall,
)
from tightbounds.table import DEFAULT_GRAPH_HYPOTHESES
from tightbounds.table import table_to_csv

table = figure1_table()

print("The knowledge table (exact rationals, boolean properties):\n")
print(table_to_csv(table))

# Step 1: every upper bound on the independence number, one optimization
# model per (invariant, hypothesis) pair. 20 models attempted, 18 survive.
uppers = make_all_upper_linear_conjectures(
    table, "independence_number", table.numeric_columns, DEFAULT_GRAPH_HYPOTHESES
)
print(f"Upper bounds on independence_number ({len(uppers)} conjectures):\n")
for k, c in enumerate(uppers, start=1):
    print(render_conjecture(c, k, table.boolean_columns))

# Step 2: sort by touch number and keep only the sharpness-independent ones.
uppers.sort(key=lambda c: c.touch, reverse=True)
kept = static_dalmatian(table, uppers)
print(f"\nAfter the sharpness filter ({len(kept)} remain):\n")
for k, c in enumerate(kept, start=1):
    print(render_conjecture(c, k, table.boolean_columns))

# Step 3: the whole pipeline over two targets, uppers and lowers merged.
run = write_on_the_wall(table, ["independence_number", "matching_number"])
print(f"\nFull run over both targets ({len(run.conjectures)} conjectures):\n")
print(render_run(run))

print("\nEqualities implied by coinciding bounds:\n")
for e in run.equalities:
    print(render_equality(e, table.boolean_columns))
