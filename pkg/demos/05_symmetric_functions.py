"""Desk-scale symmetric function identities.

Prints a k-Schur function with its spin grading, verifies the Cauchy
kernel expansion coefficientwise, checks the four product expansions at
one element, and multiplies two basis elements into structure constants.
"""

from affine_insertion import (
    cauchy_check,
    format_partition,
    format_window,
    from_reduced_word,
    k_schur,
    k_schur_spin,
    pieri_checks,
    structure_constants,
)

print("k-Schur of (2,2) at n=3, monomial coefficients:")
for lam, c in sorted(k_schur((2, 2), 3).coeffs.items()):
    print("  ", format_partition(lam), c)

print("\nspin-graded version (partition | spin -> coefficient):")
for (lam, spin), c in sorted(k_schur_spin((2, 2), 3).coeffs.items()):
    print(f"   {format_partition(lam)} | t^{spin} -> {c}")

rep = cauchy_check(3, 0, dx=3, vy=2)
print(f"\nCauchy kernel identity at n=3: {rep.checked} coefficients,",
      "all equal" if rep.ok else rep.mismatches[:2])

w = from_reduced_word(3, [2, 0])
print(f"\nproduct expansions at w = {format_window(w)}, r = 2:")
for name, r in pieri_checks(3, 0, w, 2).items():
    print(f"   {name:12s}: {'ok' if r.ok else r.mismatches[:2]}")

u = from_reduced_word(3, [1, 0])
print("\nstructure constants for the square of the one-row basis element:")
for z, c in structure_constants(u, u, "weak", 3).items():
    print("  ", format_window(z), c)
