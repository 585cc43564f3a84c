"""
Polynomiality and intersection numbers
======================================

After removing the factor r! prod alpha_i^alpha_i / alpha_i!, Hurwitz
numbers with n parts are a symmetric polynomial P_{g,n} in the parts.
Its coefficients are signed Hodge integrals, and its lowest-degree part
is a multiple of (alpha_1 + ... + alpha_n)^(2g-3+n).
"""
from hurwitzhodge import Workspace, interpolate_P, lambda_g_check, witten_table
from hurwitzhodge.sympoly import format_m_expansion

ws = Workspace()

# P_{1,1}(alpha) = (alpha - 1) / 24: one sample per integer alpha is enough to see it.
P = interpolate_P(1, 1, ws)
print("P_{1,1} =", format_m_expansion(P.nonzero()))
print("values:", [str(P((a,))) for a in range(1, 6)])

# The degree window runs from 2g-3+n up to 3g-3+n.
for g, n in [(0, 4), (1, 2), (2, 1)]:
    P = interpolate_P(g, n, ws)
    print(f"P_{{{g},{n}}} degrees {P.window}, {len(P.held_out)} points held out and matched")

# Each coefficient, with its sign fixed, is <tau_b1 ... tau_bn lambda_k>_g.
print()
for rec in witten_table(1, 2, ws).records():
    taus = " ".join(f"tau_{b}" for b in rec["b"])
    print(f"<{taus} lambda_{rec['k']}>_{rec['g']} = {rec['value']}")

# The top-lambda part: one constant c_g per genus, whatever n is.
print()
for g, n in [(1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (3, 1)]:
    print(lambda_g_check(g, n, ws).line())
