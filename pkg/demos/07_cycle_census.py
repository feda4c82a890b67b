"""The complete orbit census of maps from the triangle's edges into the
hexagon's edges, and the dimension-reducing operators two of those orbits
define.
"""

from geneograph import from_permutant, apply, measurement, orbit
from geneograph.experiments import c6_c3_context, cycle_census, orbit_operator_table

report = cycle_census()
print("total maps:", report.total)
print("census:", report.census)
for size, names in report.representatives.items():
    print(f"  orbits of size {size:2d}: {', '.join(names)}")

# Every orbit is a permutant, so every orbit defines an averaging operator
# from hexagon edge weights down to triangle edge weights.
ctx = c6_c3_context()
op, rows = orbit_operator_table("aec", ctx)
print('\noperator of orbit("aec") has coefficient rows:')
for label, row in zip(ctx.y_labels, op.coeffs):
    print(f"  {label}: {tuple(map(str, row))}")

print('\na few 0/1 weightings through the "aec" and "bfd" operators:')
op2, _ = orbit_operator_table("bfd", ctx)
for bits in [(1, 0, 0, 0, 0, 0), (1, 1, 1, 0, 0, 0), (1, 0, 0, 1, 0, 0), (1, 1, 1, 1, 1, 1)]:
    phi = measurement(bits, ctx.x_labels)
    a = tuple(map(str, apply(op, phi).values))
    b = tuple(map(str, apply(op2, phi).values))
    print(f'  {"".join(map(str, bits))}: aec -> {a}, bfd -> {b}')
