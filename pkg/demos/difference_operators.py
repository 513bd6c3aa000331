#!/usr/bin/env python3
"""The difference-operator realization on exponent series.

The same ladder algebra acts on finite sums of real powers of z:

    a    difference derivative   z**e -> f(e) * z**(e - l/alpha)
    a+   multiplication          z**e -> z**(e + l/alpha)
    N    scaled Euler operator   z**e -> alpha*e * z**e

with p**(-alpha*N - beta) and q**(alpha*N + beta) acting as dilations.
The script walks a monomial up and down the ladder and verifies the
relations exponent by exponent, including away from integer powers.
"""

from pqosc import (
    ExpSeries,
    check_realization,
    d_op,
    dilation_op,
    mult_op,
    validate,
)


def show(label, series):
    if series.is_zero():
        print(f"  {label}: 0")
        return
    text = " + ".join(f"{c:.6g} z^{e:g}" for e, c in series.terms)
    print(f"  {label}: {text}")


params = validate(2.0, 3.0, 1.0, 0.0, 1.0)
print("parameters p=2, q=3, alpha=1, beta=0, l=1")
m = ExpSeries.monomial(2.0)
show("z^2", m)
show("a z^2", d_op(m, params))
show("a+ z^2", mult_op(m, params))
show("a a+ z^2", d_op(mult_op(m, params), params))
show("q^(alpha N + beta) z^2", dilation_op(m, ratio=3.0, prefactor=1.0))
show("a 1", d_op(ExpSeries.monomial(0.0), params))

print("\nrelation residuals on monomials, several parameter sets:")
cases = [
    (2.0, 3.0, 1.0, 0.0, 1.0),
    (2.0, 3.0, 2.0, 0.5, 1.0),
    (0.5, 3.0, 0.5, -0.3, 2.0),
]
exponents = [-3.0, -1.5, 0.0, 0.5, 1.0, 2.0, 3.5, 5.0]
for p, q, alpha, beta, l in cases:
    params = validate(p, q, alpha, beta, l)
    report = check_realization(params, exponents, tol=1e-12)
    status = "PASS" if report.passed else "FAIL"
    print(f"  p={p} q={q} alpha={alpha} beta={beta} l={l}: "
          f"max residual {report.max_residual():.2e}  [{status}]")
