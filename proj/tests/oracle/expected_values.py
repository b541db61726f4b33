"""Independent symbolic oracle for the frozen expected values in the C++ tests.

Works with sympy polynomials in H truncated at H^(n+1); a class on P^n is the
polynomial sum_k a_k H^k with a_k the coefficient of [P^(n-k)]. Nothing here
shares code with the C++ engine. Run: python3 tests/oracle/expected_values.py
"""
from sympy import Rational as Q, symbols, series, expand, Poly, binomial

H, a = symbols("H alpha")


def trunc(expr, n):
    s = series(expr, H, 0, n + 1).removeO()
    p = Poly(expand(s), H)
    return [p.coeff_monomial(H**k) for k in range(n + 1)]


def as_expr(coeffs):
    return sum(c * H**k for k, c in enumerate(coeffs))


def total_polar(n, r, polar):
    # (-1)^(n-r) sum_j [P_j]^dual (x) O(1); piece of codim c gets (-1)^c (1+H)^-c.
    tot = 0
    for P in polar:
        for c, v in enumerate(P):
            tot += (-1) ** c * v * H**c / (1 + H) ** c
    return trunc((-1) ** (n - r) * tot, n)


def fulton(n, d):
    return trunc((1 + H) ** (n + 1) * d * H / (1 + d * H), n)


def mather(n, r, polar):
    return trunc((1 + H) ** (n + 1) * as_expr(total_polar(n, r, polar)), n)


def show(label, v):
    print(f"{label}: {v}")


show("invert 1+H+H^2 n=3", trunc(1 / (1 + H + H**2), 3))
show("(1+H)^-2 n=3", trunc((1 + H) ** -2, 3))
show("cap (1+H)^4, 4H-7H^2+10H^3", trunc((1 + H) ** 4 * (4 * H - 7 * H**2 + 10 * H**3), 3))
show("twist(-4,-7,-10 by O(4))",
     trunc(-4 * H / (1 + 4 * H) - 7 * H**2 / (1 + 4 * H) ** 2 - 10 * H**3 / (1 + 4 * H) ** 3, 3))
show("fulton(3,4)", fulton(3, 4))
show("fulton(3,3)", fulton(3, 3))
show("fulton(1,1)", fulton(1, 1))
ex41 = [[0, 4, 0, 0], [0, 0, 3, 0]]
show("total polar ex41", total_polar(3, 2, ex41))
show("mather ex41", mather(3, 2, ex41))
ex42 = [[0, 3, 0, 0], [0, 0, 4, 0]]
show("total polar ex42 d=3", total_polar(3, 2, ex42))
show("mather ex42 d=3", mather(3, 2, ex42))
conic = [[0, 2, 0], [0, 0, 2]]
show("total polar conic", total_polar(2, 1, conic))
show("mather conic", mather(2, 1, conic))
# Segre conversions with chi=-1, Eu=2: sigma = (chi-1)/(chi-Eu) = 2/3.
sigma = Q(-2, -3)
show("s_YX from s_YM", trunc((1 / sigma + 4 * H) * (6 * H**2 - 28 * H**3), 3))
show("s_YM from s_YX", trunc(sigma / (1 + sigma * 4 * H) * (9 * H**2 - 18 * H**3), 3))
# Prop 2 CSM route: dual (-1)^c, twist (1+dH)^-c on each codim c.
def dual_twist(coeffs, d):
    return sum((-1) ** c * v * H**c / (1 + d * H) ** c for c, v in enumerate(coeffs))
sYM = [0, 0, 6, -28]
inner = 4 * H / (1 + 4 * H) + dual_twist(trunc((1 + 4 * H) * as_expr(sYM), 3), 4)
show("csm via Segre ex41", trunc((1 + H) ** 4 * inner, 3))
sYX = [0, 0, 9, -18]
show("mather via Segre ex41", trunc((1 + H) ** 4 * (4 * H / (1 + 4 * H) + dual_twist(sYX, 4)), 3))
show("[X]/(1+X)+s^v(x)L ex41", trunc(4 * H / (1 + 4 * H) + dual_twist(sYX, 4), 3))
# Interpolation at rho=1/3 for ex41.
cF = as_expr(fulton(3, 4)); cM = as_expr(mather(3, 2, ex41)); rho = Q(1, 3)
show("csm ex41 interp", trunc(cF + (1 - rho) / (1 + rho * 4 * H) * (cM - cF), 3))
show("prop7 lhs ex41", trunc((1 + 4 * H) * (cM - cF), 3))
cF3 = as_expr(fulton(3, 3)); cM3 = as_expr(mather(3, 2, ex42))
show("prop7 lhs ex42 d=3", trunc((1 + 3 * H) * (cM3 - cF3), 3))
ca = trunc(cF3 + (1 - a) / (1 + a * 3 * H) * (cM3 - cF3), 3)
show("c_alpha ex42 d=3", [expand(c) for c in ca])
# Twisted Chern of a trivial rank 2 bundle by O(1).
show("twisted rank2 trivial by O(1)", trunc((1 + H) ** 2, 3))
# Euler characteristic of smooth hypersurfaces, closed form.
for n, d in [(3, 4), (2, 1), (2, 2), (4, 3)]:
    show(f"chi smooth n={n} d={d}", Q((1 - d) ** (n + 1) - 1, d) + n + 1)
