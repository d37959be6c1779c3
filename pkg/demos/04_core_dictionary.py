"""The dictionary between Grassmannian elements, cores, offset sequences,
bounded partitions, and codes, on the running rank-4 example."""

from affine_insertion import (
    bounded_of,
    code,
    core_of,
    core_of_bounded,
    edge_sequence,
    format_partition,
    format_window,
    from_window,
    grassmannian_of,
    k_conjugate,
    offsets,
)

w = from_window(4, [-7, -1, 4, 14])
lam = core_of(w)
b = bounded_of(lam, 4)

print("window          :", format_window(w))
print("4-core          :", format_partition(lam))
print("edge bits [-8,5]:", "".join(str(x) for x in edge_sequence(lam, -8, 5)))
print("offsets         :", offsets(lam, 4))
print("bounded         :", format_partition(b))
print("k-conjugate     :", format_partition(k_conjugate(b, 4)))
print("code            :", code(w), " size:", sum(code(w)), "= length", w.length)

print("\nroundtrips:")
print("  core -> window :", format_window(grassmannian_of(lam, 4)))
print("  bounded -> core:", format_partition(core_of_bounded(b, 4)))
