# %% [markdown]
# # Linear complexity and the cyclic code of a sequence
#
# Over GF(q) the sequence polynomial S(x) shares a factor with x^n - 1.
# What is left over, (x^n - 1)/gcd, is the minimal polynomial and also the
# generator of a cyclic code of length n.

# %%
from wgcs.codes import classify_case, theoretical_generator, wgcs_code
from wgcs.cyclotomy import whiteman
from wgcs.polyalg import bm_linear_complexity, linear_complexity, to_human
from wgcs.sequence import wgcs1

c = whiteman(7, 31)
for q in (2, 3, 5):
    s = wgcs1(c, q)
    print(q, linear_complexity(s), bm_linear_complexity(s))

# %% [markdown]
# Berlekamp-Massey on two periods agrees with the gcd route. Now the code.

# %%
code = wgcs_code(c, 2)
print(code)
print(to_human(code.gen))

# %% [markdown]
# The case analysis predicts the generator without a gcd. For n = 217 and
# q = 2 the prediction needs Lambda(beta) for a primitive 217th root of unity
# beta in GF(2^15).

# %%
report = classify_case(c, 2)
print(report.to_dict())
pred = theoretical_generator(c, 2)
print("branch d_%d" % pred.branch, pred.gen == code.gen)

# %% [markdown]
# Over GF(3) the same pair lands in the other branch with our choice of beta.
# Replacing beta by beta^r for r in an odd class swaps the two labels, so
# only the generator itself is meaningful.

# %%
pred3 = theoretical_generator(c, 3)
print("branch d_%d" % pred3.branch, pred3.gen == wgcs_code(c, 3).gen, wgcs_code(c, 3))

# %% [markdown]
# When the extension degree passes the cap the prediction still narrows the
# generator to two candidates computed over GF(q) alone.

# %%
big = whiteman(13, 19)
pred = theoretical_generator(big, 2, computed=wgcs_code(big, 2).gen)
print(pred.note)
