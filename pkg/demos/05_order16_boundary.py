"""The order-16 boundary.

Two things happen at order 16 that the invariant machinery alone cannot
handle.  First, the pair Q(D8, phi_(1,2)) and Q(D8, phi_(5,2)) shows that
the pair (P, psi|_P) does not determine the quandle: both have P = C4 with
the identity restriction, yet the fixed-point counts differ (8 vs 4).
Second, on C2 x Q8 and the twist group SD16 there are order-3 automorphisms
whose quandles share every invariant computed here, so only the complete
search can decide them.  The search's verdict goes beyond the published
classification and is labelled accordingly.
"""

import json

from quandles import (boundary_report, build_named, decide, named_automorphism,
                      profile, profile_to_json)

d8 = build_named("D8")
a = named_automorphism(d8, "phi:1,2")
b = named_automorphism(d8, "phi:5,2")
print("Q(D8, phi_(1,2)) vs Q(D8, phi_(5,2)):")
pa, pb = profile(d8, a), profile(d8, b)
print(f"  both have P of type {pa.p_iso_type[3]}; fixed counts "
      f"{pa.fix_size} vs {pb.fix_size}")
v = decide(d8, a, d8, b)
print(f"  verdict: {v.result} via {v.method} (separator: {v.separator})")

print("\nthe pair invisible to every invariant:")
g1 = build_named("C2xQ8")
psi1 = named_automorphism(g1, "right:psi_4")
print("  left side:", profile_to_json(profile(g1, psi1)))
report = boundary_report()
for entry in report["verdicts"]:
    print("  profiles agree:", entry["profiles_agree"])
    print("  search verdict (beyond the published range):",
          json.dumps(entry["verdict"]))
