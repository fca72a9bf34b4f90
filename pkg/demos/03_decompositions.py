"""Reductive splittings k = h + m: centralizers of toral elements, and root subsystems."""

from fatbundles import Centralizer, build_root_system, compact_real_form, d_type_subsystem, decompose, x_sigma

L = compact_real_form(build_root_system("C", 2))

x = x_sigma(L.rs, {1})
D = decompose(L, Centralizer({1}))
print(f"x_sigma for sigma = {{1}} is {tuple(map(str, x))}; its centralizer is u(2).")
print(f"  dim h = {D.dim_h}, dim m = {D.dim_m}, checks: {vars(D.checks)}")

D = decompose(L, d_type_subsystem(L.rs))
print("\nThe short roots +-e1 +- e2 form the root system of so(4), but inside C2 they are not closed:")
print(f"  dim h = {D.dim_h}, dim m = {D.dim_m}")
for name, value in vars(D.checks).items():
    print(f"  {name}: {value}")
for w in D.warnings():
    print(f"  warning: {w}")
