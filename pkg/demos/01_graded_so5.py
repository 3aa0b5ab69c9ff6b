#!/usr/bin/env python3
"""Tour of the graded so(5) engine.

Builds the ten-dimensional algebra behind SO(5)/SO(2)xSO(2)xSO(1),
validates its structure constants and shows how brackets interact with
the Z_2^2 grading.
"""

import json

import numpy as np

from zksym import algebra_from_dict, algebra_to_dict, build_so5, matrix_of
from zksym.so5 import LABELS

alg = build_so5()
print(f"dimension: {alg.dim}")
print(f"basis: {', '.join(alg.names)}")

for name, label in LABELS.items():
    members = [alg.names[i] for i in alg.label_indices(label)]
    print(f"  block {name}: {', '.join(members)}")

report = alg.validate(tol=0.0)
print(f"\nvalidation with zero tolerance: {report.summary()}")
print(f"max Jacobi residual: {report.max_jacobi_residual}")

# brackets respect the grading: [block a, block b] lands in block c, and so on
x1, a1, b1, c1 = (alg.basis_vector(n) for n in ("X1", "A1", "B1", "C1"))
print("\n[X1, A1] =", dict(zip(alg.names, alg.bracket(x1, a1).astype(int))))
print("[B1, C1] =", dict(zip(alg.names, alg.bracket(b1, c1).astype(int))))
print("b * c =", "a" if LABELS["b"] * LABELS["c"] == LABELS["a"] else "?")

# every basis element is a sparse skew 5x5 matrix
print("\nmatrix of B1:")
print(matrix_of(b1).astype(int))

# the algebra serializes losslessly
doc = json.dumps(algebra_to_dict(alg))
back = algebra_from_dict(json.loads(doc))
print("\nJSON round trip bit-exact:", np.array_equal(back.structure, alg.structure))
