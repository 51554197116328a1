"""Exact residuals for the negative-pin fixtures, computed symbolically.

Independent of the package: projectors are built from rational/radical
spanning vectors and spectral norms from the exact Gram eigenvalues.
"""
import sympy as sp


def proj(*vecs):
    a = sp.Matrix.hstack(*[sp.Matrix(v) for v in vecs])
    return sp.simplify(a * (a.T * a).inv() * a.T)


def spec_norm(m):
    eig = (m.T * m).eigenvals()
    return sp.sqrt(sp.Max(*[sp.nsimplify(sp.simplify(e)) for e in eig]))


def recon(W, w, V, v):
    S = sp.zeros(3)
    for P, a in zip(W, w):
        S += a**2 * P
    Si = S.inv()
    M = sp.zeros(3)
    for Pw, a, Pv, b in zip(W, w, V, v):
        M += a * b * Pv * Si * Pw
    return sp.simplify(M)


e1, e2, e3 = (1, 0, 0), (0, 1, 0), (0, 0, 1)
r2 = sp.sqrt(2)

# Example S, reverse direction
W = [proj(x) for x in (e1, e2, e3, e2, e1, e3)]
V = [proj(x) for x in (e1, e2, e3, e3, e2, e1)]
print("S reverse", spec_norm(recon(V, [2] * 6, W, [1] * 6) - sp.eye(3)))
print("S forward", spec_norm(recon(W, [1] * 6, V, [2] * 6) - sp.eye(3)))

# six-vector discrete pair
F = [e1, e2, e3, e2, e1, e3]
G = [(2, 0, 0), (0, 2, 0), (0, 0, 2), (0, 0, 2), (0, 2, 0), (2, 0, 0)]
M = sum((sp.Matrix(f) * sp.Matrix(g).T for f, g in zip(F, G)), sp.zeros(3))
print("six-vector", spec_norm(M - sp.eye(3)))

# exam in R3 and the family built from discrete canonical dual directions
W = [proj(e1), proj((1, 1, 0)), proj(e2), proj(e3)]
w = [1, r2, 1, 1]
V = [proj((3, -2, 0)), proj((1, 1, 0)), proj((-2, 3, 0)), proj(e3)]
v = [sp.Rational(1, 5), r2 / 5, sp.Rational(1, 5), 1]
fwd = spec_norm(recon(W, w, V, v) - sp.eye(3))
rev = spec_norm(recon(V, v, W, w) - sp.eye(3))
print("exam fwd", sp.simplify(fwd), sp.N(fwd, 17))
print("exam rev", sp.simplify(rev), sp.N(rev, 17))

# local canonical duals outside canonical dual subspaces
Sw = sum((a**2 * P for P, a in zip(W, w)), sp.zeros(3))
Si = Sw.inv()
g = [e1, (sp.Rational(1, 2), sp.Rational(1, 2), 0), e2, e3]
spans = [Si * sp.Matrix(x) for x in (e1, (1, 1, 0), e2, e3)]
for gi, s in zip(g, spans):
    P = proj(list(s))
    r = (sp.eye(3) - P) * sp.Matrix(gi)
    print("outside", sp.simplify(r.norm()), sp.N(r.norm(), 17))
