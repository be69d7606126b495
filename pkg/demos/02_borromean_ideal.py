# %% [markdown]
# The Borromean rings ideal
#
# Sixteen trace differences plus K generate the kernel for the Borromean
# rings group.  Four vanish; the other twelve match the closed forms below
# modulo K.

# %%
from skein3.ideal import (
    borromean_presentation,
    check_symmetries,
    format_label,
    theorem2_generators,
    theorem3_table,
    verify_theorem3,
)
from skein3.polyring import format_poly

pres = borromean_presentation()
print(pres.to_text())

# %%
gens = theorem2_generators(pres)
for label, poly in gens.labeled()[:4]:
    print(f"{label}: {format_poly(poly)[:90]}...")

# %%
table = theorem3_table()
print("zero labels:", [format_label(l) for l, q in table.items() if q.is_zero()])

# %%
report = verify_theorem3()
print("all labels divisible:", report.ok)
for r in report.results[:6]:
    print(format_label(r.label), "quotient terms:", len(r.quotient))

# %% [markdown]
# Index symmetries: -s23 swaps the ab and gd families.

# %%
sym = check_symmetries()
for a, b, holds in sym.remark:
    print(f"-s23 {format_label(a)} -> {format_label(b)}: {holds}")
for label, found in sym.self_symmetries.items():
    print(format_label(label), found)
