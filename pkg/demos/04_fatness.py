"""Two fatness tests that must agree: wall avoidance and the curvature determinant."""

from fractions import Fraction

from fatbundles import Centralizer, build_root_system, compact_real_form, curvature_form, decompose, nondegenerate, wall_test

L = compact_real_form(build_root_system("C", 2))
D = decompose(L, Centralizer({1}))

for u in [(Fraction(1, 2), Fraction(1, 2)), (Fraction(1), Fraction(-1)), (Fraction(0), Fraction(3))]:
    cert = wall_test(u, D)
    ok, det = nondegenerate(curvature_form(u, D))
    walls = [tuple(map(str, w.wall.root)) for w in cert.witnesses]
    print(f"u = {tuple(map(str, u))}: wall test says {cert.verdict}, curvature determinant {det}; walls hit: {walls}")
