"""Compact real forms from a Chevalley basis, checked by brute force."""

from fatbundles import build_root_system, compact_real_form, exact
from fatbundles.chevalley import Label, invariance_violations, jacobi_violations

L = compact_real_form(build_root_system("A", 1))
H, U, V = L.index[Label("H", 0)], L.index[Label("U", (1, -1))], L.index[Label("V", (1, -1))]
print("su(2) in the basis iH, U, V:")
for a, b in [(H, U), (H, V), (U, V)]:
    out = {str(L.labels[k]): str(c) for k, c in L.bracket_basis(a, b).items()}
    print(f"  [{L.labels[a]}, {L.labels[b]}] = {out}")
print(f"  Killing Gram: {[[str(x) for x in row] for row in L.killing_gram]}")

for family, rank in [("B", 2), ("C", 2), ("C", 3)]:
    L = compact_real_form(build_root_system(family, rank))
    ok = not jacobi_violations(L) and not invariance_violations(L)
    neg = exact.is_negative_definite(L.killing_gram)
    print(f"{L.rs.name}: dim {L.dim}, Jacobi and invariance hold: {ok}, Killing form negative definite: {neg}")
