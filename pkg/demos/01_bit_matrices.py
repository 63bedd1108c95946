"""
Bit matrices over GF(2)
=======================

Rows are packed into Python integers, so rank, inverse and solving are
plain XOR elimination.  numpy arrays convert in both directions.
"""

import numpy as np

from gf2reduce import BitMatrix
from gf2reduce.gf2 import inverse, nullspace_basis, rank, solve_right

a = BitMatrix(["10011", "01111", "01100", "11011", "11010"])
print("A =")
print(a.to_numpy())
print("rank", rank(a))

# this matrix is symmetric, so its inverse is also the retrograph adjacency
a_inv = inverse(a)
print("A^-1 =")
print(a_inv.to_numpy())
print("A A^-1 is the identity:", a @ a_inv == BitMatrix.identity(5))

# P M = Q, free variables set to zero
p = BitMatrix([[0, 1], [1, 0]])
q = BitMatrix([[1], [0]])
print("M with P M = Q:", solve_right(p, q).tolist())

# kernel of a rank-one matrix
print("kernel of [[1,1],[1,1]]:", nullspace_basis(BitMatrix(np.ones((2, 2), dtype=int))))
