# %% [markdown]
# # Six classes modulo a product of two primes
#
# Pick two primes whose predecessors share exactly the factor 6. The units
# modulo n = n1*n2 then split into six classes W0..W5 of equal size, and the
# rest of Z_n falls into the multiples of n1 (P), the multiples of n2 (Q) and 0.

# %%
import numpy as np

from wgcs.cyclotomy import cyclotomic_table, minus_one_class, solve_quadform_reps, whiteman

c = whiteman(7, 13)
print("g =", c.g, " u =", c.u, " e =", c.e, " eta =", c.eta)
print(c.classes.sizes())

# %% [markdown]
# The class of -1 flips with the parity of eta: W3 here, since n = 91 is 7 mod 12.

# %%
print("-1 lies in W%d" % minus_one_class(c))
print("-1 lies in W%d for (7, 19)" % minus_one_class(whiteman(7, 19)))

# %% [markdown]
# Cyclotomic numbers count how often one class shifted by 1 lands in another.
# Brute force gives the 6x6 table; the closed forms need representations of n
# and 4n by two quadratic forms.

# %%
print(cyclotomic_table(c))
r = solve_quadform_reps(7, 13)
print("n  = %d^2 + 3*%d^2" % (r.repX, r.repY))
print("4n = %d^2 + 3*%d^2 = %d^2 + 27*%d^2" % (r.repA, r.repB, r.repC, r.repD))

# %% [markdown]
# ## The binary sequence and its autocorrelation
#
# The sequence is 1 on P and on the odd classes W1, W3, W5.

# %%
from wgcs.sequence import acf_spectrum, wgcs1

s = wgcs1(c)
print(s.to_bitstring())
print("weight", s.weight(), "of", s.n)

# %%
for value, shifts in acf_spectrum(s).items():
    print(f"{str(value):>8}  on {len(shifts):3d} shifts")

# %% [markdown]
# With eta odd there is one more value: units now split by class parity.

# %%
for value, shifts in acf_spectrum(wgcs1(whiteman(7, 19))).items():
    print(f"{str(value):>9}  on {len(shifts):3d} shifts")
