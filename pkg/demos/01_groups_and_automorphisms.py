"""Build small groups as Cayley tables and enumerate their automorphisms.

Every group in the catalog lives on element indices 0..n-1 with the identity
pinned at 0, so subgroup and automorphism machinery is plain integer
arithmetic.
"""

from quandles import (automorphism_conjugacy_classes, automorphism_group,
                      build_named, center, generated_subgroup,
                      groups_isomorphic, is_simple)

d4 = build_named("D4")
print(f"{d4.name}: order {d4.order}")
print("multiplication table:")
for row in d4.table:
    print("  ", row)

print("\nelement orders:", [d4.element_order(x) for x in range(d4.order)])
print("center:", center(d4).members)

sub = generated_subgroup(d4, {2, 4})
print("subgroup generated by {sigma^2, tau}:", sub.members)

print("\nautomorphisms of D4:")
for psi in automorphism_group(d4):
    print("  ", psi.images, "order", psi.map_order())

print("\nconjugacy classes of Aut(D4):")
for rep, size in automorphism_conjugacy_classes(d4):
    print(f"   size {size}: rep {rep.images}")

q8 = build_named("Q8")
print(f"\n|Aut(Q8)| = {len(automorphism_group(q8))} "
      f"(acts like the symmetric group on the three imaginary axes)")

print("\nbrute-force group isomorphism:")
d3 = build_named("D3")
s3 = build_named("S3")
wit = groups_isomorphic(d3, s3)
print(f"  D3 vs S3: witness {wit.images}")
print(f"  C4 vs C2xC2: {groups_isomorphic(build_named('C4'), build_named('C2xC2'))}")

print("\nsimplicity scan:", {name: is_simple(build_named(name))
                             for name in ("C7", "A4", "A5")})
