"""Standard Young tableaux, hook products, and dimension counting.

Run:  python3 demos/01_tableaux_and_dimensions.py
"""
from youngops import YoungDiagram, enumerate_syt, partitions

n = 4
print(f"Partitions of {n}: {[d.rows for d in map(YoungDiagram, partitions(n))]}")
print()

tableaux = enumerate_syt(n)
print(f"There are {len(tableaux)} standard tableaux with {n} boxes:")
for t in tableaux:
    shape = t.shape
    print(f"  {t.to_string():<10} shape {shape.rows}  "
          f"hook product {shape.hook_product():>3}  "
          f"multiplicity f = {shape.syt_count()}")
print()

# The number of tableaux of a shape times the hook product is n!.
for t in tableaux:
    shape = t.shape
    assert shape.syt_count() * shape.hook_product() == 24

# Each shape carries a polynomial in N giving the dimension of the
# corresponding irreducible GL(N) representation: the trace of the
# projector on N-dimensional tensor slots.
print("Dimension polynomials (as functions of the slot dimension N):")
for t in tableaux:
    shape = t.shape
    poly = shape.dimension_polynomial() / shape.hook_product()
    print(f"  {t.to_string():<10} dim(N) = {poly}")
print()

for N in (2, 3, 4):
    total = sum(t.shape.dimension(N) for t in tableaux)
    print(f"  sum of dimensions at N={N}: {total} = {N}^{n} = {N**n}")
    assert total == N ** n
