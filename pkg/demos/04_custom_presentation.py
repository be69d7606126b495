# %% [markdown]
# Ideal generators for a presentation of your own
#
# Z x F2 style group: g3 commutes with g1 and with g2.

# %%
from skein3.ideal import parse_presentation, theorem2_generators
from skein3.oracle import Mat2, SL2Rep, trace_point
from skein3.polyring import evaluate, format_poly, rem_mod_K

text = """
generators: g1 g2 g3
relation: g1*g3 = g3*g1
relation: g2*g3 = g3*g2
"""
pres = parse_presentation(text)
gens = theorem2_generators(pres)
for label, poly in gens.labeled():
    nf = rem_mod_K(poly)
    print(f"{label}: {format_poly(nf) if not nf.is_zero() else '0'}")

# %% [markdown]
# A representation where g3 is central (minus the identity) satisfies both
# relations, so every generator vanishes at its trace point.

# %%
rep = SL2Rep(Mat2(2, 1, 1, 1), Mat2(1, 2, 0, 1), Mat2(-1, 0, 0, -1))
point = trace_point(rep)
assert all(evaluate(p, point) == 0 for p in gens.polynomials())
print("all", len(gens.polynomials()), "generators vanish at", [str(v) for v in point])
