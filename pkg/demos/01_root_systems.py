"""Classical root systems in e-coordinates, and the Weyl chamber of a vector."""

from fractions import Fraction

from fatbundles import build_root_system, dominant_representative, evaluate_root

for family, rank in [("A", 2), ("B", 2), ("C", 2), ("D", 3)]:
    rs = build_root_system(family, rank)
    print(f"{rs.name}: {len(rs.roots)} roots, simple roots {[tuple(map(str, a)) for a in rs.simple_roots]}")
    print(f"  Cartan matrix {[list(r) for r in rs.cartan_matrix]}")

c2 = build_root_system("C", 2)
u = (Fraction(-1), Fraction(2))
w = dominant_representative(u, c2)
print(f"\nIn C2 the vector {tuple(map(str, u))} is Weyl-conjugate to the dominant {tuple(map(str, w))}.")
for a in c2.simple_roots:
    print(f"  simple root {tuple(map(str, a))} takes the value {evaluate_root(a, w)} there")
