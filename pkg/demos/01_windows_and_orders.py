"""Tour of the affine symmetric group in window notation.

Builds the running element [-7,-1,4,14] of rank 4 from a reduced word,
checks the two length formulas against each other, and factors it through
the coroot lattice.
"""

from affine_insertion import (
    code,
    coroot_decompose,
    format_window,
    from_reduced_word,
    inversions,
    reduced_word,
    translation,
)

word = [1, 2, 3, 0, 3, 2, 1, 0, 3, 2, 0, 3, 1, 0]
w = from_reduced_word(4, word)

print("word      :", word)
print("window    :", format_window(w))
print("length    :", w.length)
print("inversions:", len(inversions(w)), "=", inversions(w)[:5], "...")
print("code      :", code(w))
print("descent-stripped reduced word:", reduced_word(w))

u, beta = coroot_decompose(w)
print("\nfinite part        :", format_window(u))
print("coroot             :", beta)
print("translation length :", translation(beta).length, "(= length(w) + length(u))")
print("grassmannian?      :", w.is_grassmannian(0))
