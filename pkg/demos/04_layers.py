"""The layer table of Iu_n, and how it compares with the lower central series.

Rows: a's at layer 0, off-diagonal x_ij at their length, b's at layer n.
Brackets add layers and vanish past n, so the rows give a filtration.  The
terms of the series [g,g], [g', g'_(p-1)], ... sit inside it with
codimension one: every bracket has b-trace zero, so b_1 + ... + b_n is
never produced.
"""

from lieforge import build_Iu_direct, layer_series, verify_layer_table, verify_metric_layers
from lieforge.analysis import layer_trace_gap
from lieforge.cli import table_lines

n = 3
print("\n".join(table_lines(n)))
print()
rep = verify_layer_table(n)
for key, sub in rep.checks.items():
    print(f"({key}) {'pass' if sub else 'fail'}", "" if sub else sub.failures[0])
print("series dims:", [s.dim for s in layer_series(build_Iu_direct(n))])
print("series = filtration minus the b-trace direction:", bool(layer_trace_gap(n)))
print("pairing meets layers p and n-p only, and is invariant:", bool(verify_metric_layers(n)))
