# %% [markdown]
# # Minimum distance
#
# Small codes are enumerated outright. Bigger ones get a lower bound from their
# shape and an upper bound from a randomized information-set search.

# %%
import numpy as np

from wgcs import codes as cd
from wgcs.cyclotomy import whiteman

c = whiteman(7, 13)
for kind, i in (("single", 1), ("single", 2), ("double", None)):
    code = cd.CyclicCode(c.n, 2, cd.shape_generator(c, 2, kind, i))
    print(kind, i, code, cd.min_distance_exact(code).exact)

# %% [markdown]
# The [217,121] binary code. Its shape gives a square-root lower bound.

# %%
c = whiteman(7, 31)
code = cd.wgcs_code(c, 2)
shape = cd.infer_shape(c, 2, code.gen)
print(shape, cd.distance_bounds(c, 2, *shape, gen=code.gen))

# %%
found = cd.min_distance_upper(code, trials=300, seed=0)
print(found.upper, found.detail)

# %% [markdown]
# The search settles on weight 7, and the witness is a cyclic shift of
# (x^217 - 1)/(x^31 - 1) = 1 + x^31 + ... + x^186. The generator divides that
# polynomial, so it is a codeword.

# %%
from wgcs.polyalg import Poly

word = Poly.xn_minus_one(217, 2).exact_div(Poly.xn_minus_one(31, 2))
print(word.weight(), (word % code.gen).is_zero())
print(np.flatnonzero(found.witness))
