"""Twistor bundles over Sp(2n)/SO(2n), and a case with no complex structure of the form ad T."""

from fatbundles import Centralizer, build_root_system, certify_twistor, compact_real_form, d_type_subsystem

for n in (2, 3, 4):
    L = compact_real_form(build_root_system("C", n))
    cert = certify_twistor(L, d_type_subsystem(L.rs))
    print(f"Sp({2 * n})/SO({2 * n}): {cert.verdict}, T = {tuple(map(str, cert.T))}, fiber {cert.fiber}")
    for w in cert.warnings:
        print(f"  note: {w}")

L = compact_real_form(build_root_system("A", 2))
cert = certify_twistor(L, Centralizer(()))
print(f"SU(3)/T: {cert.verdict}, since alpha + beta cannot take the value +-1 when alpha and beta do")
