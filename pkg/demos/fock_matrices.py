#!/usr/bin/env python3
"""Truncated ladder matrices and the defining relations.

Builds the matrix representation on a small basis, prints the ladder
matrices and weights, and shows that the twisted relations

    a a+ - q**l  a+ a = P,      a a+ - p**(-l) a+ a = Q

close exactly on the interior in grading mode, while the literal
reading of P, Q as functions of N's eigenvalues only closes at
alpha = 1.
"""

import numpy as np

from pqosc import check_relations, validate
from pqosc.fock import build

np.set_printoptions(precision=4, suppress=True)

params = validate(2.0, 3.0, 1.0, 0.0, 1.0)
rep = build(params, dim=4)

print("weights w_k = bracket(l*k):", np.round(rep.weights, 6))
print("\nlowering matrix a:")
print(rep.a)
print("\nraising matrix a+ (transpose of a):")
print(rep.a_dag)
print("\nnumber operator N:")
print(rep.n_op)

print("\nHamiltonian diagonal a+a + aa+ (interior):",
      np.round(np.diag(rep.a_dag @ rep.a + rep.a @ rep.a_dag)[:3], 6))

for alpha in (1.0, 2.0):
    params = validate(2.0, 3.0, alpha, 0.0, 1.0)
    rep = build(params, dim=16)
    maxweight = float(np.max(np.abs(rep.weights)))
    print(f"\nalpha = {alpha}:")
    for mode in ("grading", "literal"):
        report = check_relations(rep, mode, tol=1e-11 * maxweight)
        status = "PASS" if report.passed else "FAIL"
        print(f"  {mode:>8} mode: max residual {report.max_residual():.3e}  [{status}]")
print("\n(the literal failure at alpha = 2 is the expected negative case)")
