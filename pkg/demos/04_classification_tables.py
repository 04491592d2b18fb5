"""Reproduce the classification of generalized Alexander quandles up to
order 15 and print the per-order tables."""

from quandles import classify_order, closed_form_counts, emit_table

print("number of quandle classes per group order:")
counts = []
for n in range(1, 16):
    report = classify_order(n)
    counts.append(report.class_count)
    formula = closed_form_counts(n)
    tag = f" (closed form {formula})" if formula is not None else ""
    print(f"  order {n:2d}: {report.class_count}{tag}")
print("\nrow:", counts)

print()
print(emit_table(classify_order(8), "markdown"))
print()
print(emit_table(classify_order(12), "markdown"))
