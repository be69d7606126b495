# %% [markdown]
# Trace polynomials of free-group words
#
# Every word in g1, g2, g3 has an integer polynomial in the seven trace
# coordinates that computes tr(rho(w)) for any SL2 representation rho.

# %%
from skein3 import format_poly, parse_word, trace_nf, trace_poly
from skein3.words import canonical_trace_key

for text in ["g1^2", "g1*g2^-1", "g1*g3*g2", "g1^-1*g3*g2", "g1*g2*g1*g3"]:
    w = parse_word(text)
    print(f"{text:>14}  ->  {format_poly(trace_poly(w))}")

# %% [markdown]
# Conjugates and inverses share one canonical key, hence one polynomial.

# %%
w = parse_word("g2*g1^3*g3^-1")
conj = parse_word("g3") * w * parse_word("g3^-1")
print(canonical_trace_key(w), canonical_trace_key(conj), canonical_trace_key(w.inverse()))
assert trace_poly(w) == trace_poly(conj) == trace_poly(w.inverse())

# %% [markdown]
# Long words pick up powers of x123; the normal form keeps x123-degree <= 1.

# %%
long_word = parse_word("g1*g2*g3*g1*g2*g3")
p = trace_poly(long_word)
print("degree in x123:", p.degree(6), "->", trace_nf(long_word).degree(6))
print(format_poly(trace_nf(long_word)))
