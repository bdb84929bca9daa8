"""
Arithmetic and elimination over GF(p)
=====================================

Field elements, a row reduction, a kernel and a basis completion.
"""

import numpy as np

from zkcss import LinearCode, Matrix, PrimeField, complete_basis, kernel_basis, rank, rref, solve

# %%
# Field elements carry their modulus and always stay reduced.
F = PrimeField(7)
a, b = F(3), F(5)
print(a + b, a * b, a / b, a.inverse())

# %%
# Matrices wrap a read-only int64 array of residues.
M = Matrix(F, [[1, 2, 3, 4], [2, 4, 6, 1], [0, 0, 1, 5]])
R, pivots = rref(M)
print(R.array)
print("pivots", pivots, "rank", rank(M))

# %%
# One kernel vector per free column. Rank plus nullity is the width.
K = kernel_basis(M)
print(K.array.T)
assert not (M @ K).array.any()
assert rank(M) + K.cols == M.cols

# %%
# ``solve`` zeroes the free variables, so the answer is reproducible.
b = M @ np.array([1, 1, 0, 0])
print("solution", solve(M, b))

# %%
# Complete a single codeword of the even-weight code to a full generator.
F2 = PrimeField(2)
even = LinearCode.from_parity_check(Matrix(F2, [[1, 1, 1]]))
G = complete_basis(Matrix(F2, [[1], [1], [0]]), even)
print(G.array)
