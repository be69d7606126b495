# %% [markdown]
# Checking trace polynomials against exact SL2 matrices
#
# Random products of integer shears give exact SL2(Z) representations.

# %%
from skein3 import format_poly, parse_word, trace_poly
from skein3.oracle import check_word, fuzz, random_rep, trace_point, word_matrix
from skein3.polyring import evaluate, fricke_K

rep = random_rep(seed=3)
point = trace_point(rep)
print("trace point:", [str(v) for v in point])
print("K at trace point:", evaluate(fricke_K(), point))

# %%
w = parse_word("g1^2*g3^-1*g2*g1^-1*g3")
print(format_poly(trace_poly(w)))
print("polynomial:", evaluate(trace_poly(w), point), " matrix:", word_matrix(rep, w).trace())
assert check_word(rep, w)

# %% [markdown]
# The fuzzer repeats this over seeded trials; results do not depend on
# the worker count.

# %%
report = fuzz(200, max_syllables=10, seed=7)
print(report.trials, "trials,", len(report.failures), "failures")
assert report.to_json() == fuzz(200, max_syllables=10, seed=7, workers=2).to_json()
