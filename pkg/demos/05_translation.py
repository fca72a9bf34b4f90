"""Pushing a polytope off every forbidden wall along x_sigma, with the exact threshold."""

from fatbundles import Centralizer, Polytope, build_root_system, compact_real_form, decompose, polytope_fat, translate_polytope, x_sigma

L = compact_real_form(build_root_system("C", 2))
D = decompose(L, Centralizer({1}))
d = x_sigma(L.rs, {1})
square = Polytope([(1, 1), (1, -1), (-1, 1), (-1, -1)])

t = translate_polytope(square, d, D)
print(f"direction d = {tuple(map(str, d))}, threshold c* = {t.threshold}")
print(f"walls that hold out longest: {[tuple(map(str, w.root)) for w in t.active_walls]}")
for c in (0, 1, t.threshold, t.threshold + 1):
    print(f"  c = {c}: square + c*d is {polytope_fat(square.translated(d, c), D).verdict}")
