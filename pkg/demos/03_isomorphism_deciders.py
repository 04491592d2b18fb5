"""Decide quandle isomorphism by independent routes and compare them.

The dispatcher runs every applicable decider (profile separation, the
simple/abelian/dihedral/cyclic formulas, the structural criterion, complete
backtracking search) and insists they agree; isomorphic verdicts always
carry an exhaustively verified point map.
"""

from quandles import (brute_force_iso, build_named, check_theorem39_properties,
                      decide, general_alexander, named_automorphism,
                      normalize_witness, theorem13_iso)

# the classic cross-group merge at order 8
d4 = build_named("D4")
q8 = build_named("Q8")
psi1 = named_automorphism(d4, "phi:3,1")
psi2 = named_automorphism(q8, "psi_3")
v = decide(d4, psi1, q8, psi2)
print(f"Q(D4, phi_(3,1)) vs Q(Q8, psi_3): {v.result} via {v.method}")
print("  witness:", v.witness)

# a cyclic quandle realized inside a dihedral group
c10 = build_named("C10")
d5 = build_named("D5")
v = decide(c10, named_automorphism(c10, "mul:3"), d5, named_automorphism(d5, "phi:3,1"))
print(f"\nQ(C10, x3) vs Q(D5, phi_(3,1)): {v.result} via {v.method}")
w = normalize_witness(general_alexander(d5, named_automorphism(d5, "phi:3,1")), v.witness)
report = check_theorem39_properties(w, c10, named_automorphism(c10, "mul:3"),
                                    d5, named_automorphism(d5, "phi:3,1"))
print("  witness structure checks (orbit image, intertwining, "
      "multiplicativity, cosets):", report.clauses)

# profile separation: no search needed
c222 = build_named("C2xC2xC2")
m5 = named_automorphism(c222, "mat:0,0,1;1,0,0;0,1,1")
m6 = named_automorphism(c222, "mat:0,0,1;1,0,1;0,1,0")
v = decide(c222, m5, c222, m6)
print(f"\ntwo order-7 maps on C2^3: {v.result} via {v.method}, "
      f"separated by {v.separator!r}")

# the structural criterion declines when its preconditions fail
psi4 = named_automorphism(q8, "psi_4")
v = theorem13_iso(q8, psi4, q8, psi4)
print(f"\nstructural criterion on Q(Q8, psi_4) vs itself: {v.result} ({v.note})")
v = brute_force_iso(general_alexander(q8, psi4), general_alexander(q8, psi4))
print(f"backtracking search on the same pair: {v.result}")
