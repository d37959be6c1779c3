"""Affine insertion of a 3-bounded matrix through its growth diagram.

Reproduces the worked 3x3 example: the matrix [[0,1,0],[0,0,2],[1,0,1]]
maps to a strong tableau P of spin 2 on the core (5,3,1) and a weak
tableau Q, and uninsertion recovers the matrix.
"""

from affine_insertion import (
    BoundedMatrix,
    affine_uninsert,
    core_of,
    format_partition,
    grassmannian_rsk,
    render_strong_tableau,
    render_weak_tableau,
    spin_tableau,
)

m = BoundedMatrix.from_rows([[0, 1, 0], [0, 0, 2], [1, 0, 1]])
p, q, diagram = grassmannian_rsk(m, 3, return_diagram=True)

print("matrix:")
for row in m.to_rows():
    print("  ", row)
print("\ncommon shape:", format_partition(core_of(p.outside)))
print("\nP (strong, spin %d):" % spin_tableau(p))
print(render_strong_tableau(p))
print("\nQ (weak):")
print(render_weak_tableau(q))

print("\nper-cell case trails:")
for (i, j), steps in sorted(diagram.audits.items()):
    print(f"  cell ({i},{j}):", "".join(step.case.value for step in steps) or "-")

t, u, back = affine_uninsert(p, q, 0)
print("\nuninsertion recovers the matrix:", back == m)
