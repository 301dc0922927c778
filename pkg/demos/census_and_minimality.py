"""Which rank vectors are realized, by how many graphs, and which ones are
minimal with respect to the augmentation/extension order."""

from copwin import census, check_minimal, parse_vector

for text, r in [("(2,2,2,1)", "any"), ("(2,3)", 0), ("(1,2,2,1)", "any"), ("(2,2,2,1,1)", "any")]:
    c = census(parse_vector(text), r)
    print(f"{text:<14} r={r:<4} realizers={c.count} via {c.method}")

print()
for text, r in [("(1,2)", 1), ("(2,2,2,1)", 1), ("(2,2)", 0), ("(3,3,2,1)", 0), ("(2,7,2,1)", 1), ("(2,6,2,1)", 0)]:
    m = check_minimal(parse_vector(text), r)
    if m.minimal is False:
        verdict = f"is not {r}-minimal, below it sits {m.witness[0]}"
    elif m.minimal:
        verdict = f"is {r}-minimal"
    else:
        verdict = f"{r}-minimality undecided at sum cap {m.sum_cap_used}, untested: {', '.join(map(str, m.residual))}"
    print(f"{text:<12} {verdict}")

# raising the cap settles the last one
m = check_minimal(parse_vector("(2,6,2,1)"), 0, sum_cap=10)
print("(2,6,2,1) at cap 10:", "0-minimal" if m.minimal else m)
