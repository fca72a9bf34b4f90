"""Seeded agreement run between the wall test and the curvature determinant."""

from fatbundles import Centralizer, build_root_system, compact_real_form, curvature_form, decompose
from fatbundles.oracle import run_oracle

for family, rank, sigma in [("C", 2, {1}), ("A", 2, {1}), ("B", 2, {2})]:
    L = compact_real_form(build_root_system(family, rank))
    rep = run_oracle(decompose(L, Centralizer(sigma)), samples=200, seed=7)
    print(f"{L.rs.name}, sigma = {sorted(sigma)}: {rep.agree}/{rep.samples} agree ({rep.fat} fat, {rep.not_fat} not fat)")


def broken(u, D):
    return curvature_form((-u[0],) + tuple(u[1:]), D)


L = compact_real_form(build_root_system("C", 2))
rep = run_oracle(decompose(L, Centralizer({1})), samples=200, seed=7, curvature=broken)
print(f"with a sign slip in the curvature: {rep.agree}/{rep.samples} agree, first disagreement at {tuple(map(str, rep.disagreements[0]))}")
