"""
From Hurwitz numbers to the lambda_g formula
============================================

The symmetrized series of Hurwitz numbers is rewritten in new variables
y_i defined by y_i - 1 = sum_m m^m / m! x_i^m.  Collecting the terms of lowest total degree gives c_g times a complete
symmetric function, and the next layer gives the coefficient tables below.
"""
from hurwitzhodge import Workspace, c_g, lambda_series, table_report, witten_table
from hurwitzhodge.pipeline import minhur_closed_form
from hurwitzhodge.sympoly import format_m_expansion, to_m_basis

ws = Workspace()

# Lowest layer for g = 1, n = 2: a multiple of y1 y2 h_1(y1, y2).
low = lambda_series(1, 2, 0, ws)
print("Lambda^1_{2,0} =", low.pretty())
print("same as the Witten closed form:", low == minhur_closed_form(1, 2, witten_table(1, 2, ws)))

# One layer up, scaled by 1/c_1 = 24 and written in monomial symmetric functions.
for n in (1, 2, 3):
    row = lambda_series(1, n, 1, ws) * 24
    print(f"24 Lambda^1_{{{n},1}} =", format_m_expansion(to_m_basis(row)))

# The genus-one rows next to their printed versions.
print()
for row in table_report("g1", [1, 2, 3, 4], ws):
    print(row.line())

# Higher genus: c_g^{-1} Lambda^g_{n,1}.  The printed rows carry an extra factor
# 2^(2g-1) - 1, which the comparison reports as the ratio.
print()
for g in (2, 3):
    print(f"c_{g} = {c_g(g, ws)}")
for row in table_report("higher", [2], ws):
    print(row.line())
