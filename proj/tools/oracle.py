"""Independent sympy cross-check of the frozen reference values used in tests/.

Run: python3 tools/oracle.py
"""
import itertools

import sympy as sp

I, s2, s6 = sp.I, sp.sqrt(2), sp.sqrt(6)
q1, q2, p1, p2 = sp.symbols("q1 q2 p1 p2")


def lie(mu, V, F):
    q, p = (q1, q2), (p1, p2)
    return sp.expand(sum(mu[k] * p[k] * sp.diff(F, q[k]) - sp.diff(V, q[k]) * sp.diff(F, p[k]) for k in range(2)))


def tau(F):
    return sp.expand(F.subs({p1: -p1, p2: -p2}, simultaneous=True))


def cofactor(mu, V, F):
    q, r = sp.div(lie(mu, V, F), sp.expand(F), q1, q2, p1, p2)
    return sp.simplify(q) if sp.expand(r) == 0 else None


out = {}
out["inv(i*sqrt2)"] = sp.nsimplify(1 / (I * s2))
S1 = ((1, 1), q1**4)
S2 = ((1, 1), (q1**2 + q2**2) ** 2)
S3 = ((1, 1), q1**2 + q2**4)
S4 = ((1, 1), sp.Rational(4, 3) * q1**4 + q1**2 * q2**2 + q2**4 / 12)
S5 = ((1, 1), sp.Rational(4, 3) * q1**4 + q1**2 * q2**2 + q2**4 / 6)
G1 = I * p2 + s2 * q2**2
out["L_S3(G1)"] = lie(*S3, G1)
out["div"] = sp.cancel(sp.expand(2 * s2 * q2 * p2 - 4 * I * q2**3) / G1)
out["cof S3 G1"] = cofactor(*S3, G1)
out["cof S3 tau G1"] = cofactor(*S3, tau(G1))
out["tauG1*G1"] = sp.expand(tau(G1) * G1)
out["cof S3 q1+p1"] = cofactor(*S3, q1 + p1)
out["L_S3(p2^2+2q2^2)"] = lie(*S3, p2**2 + 2 * q2**2)
out["L_S3(p2^2+2q2^4)"] = lie(*S3, p2**2 + 2 * q2**4)
out["L_S3(p2)"] = lie(*S3, p2)
out["L_S1(p2)"] = lie(*S1, p2)
out["L_S2(L)"] = lie(*S2, q1 * p2 - q2 * p1)
F4 = p2 * (p1 * q2 - p2 * q1) + q2**2 * (2 * q1**3 + q1 * q2**2) / 3
out["L_S4(F4)"] = lie(*S4, F4)
G5 = 3 * s6 * p2**2 + 12 * I * p2 * q1 * q2 + q2**2 * (-6 * I * p1 + s6 * (2 * q1**2 + q2**2))
lc = sp.expand(G5).coeff(p2, 2)
out["S5 G monic"] = sp.expand(G5 / lc)
out["cof S5 G"] = cofactor(*S5, G5)
out["cof S5 tau G"] = cofactor(*S5, tau(G5))
out["L_S5(tauG G)"] = lie(*S5, sp.expand(tau(G5) * G5))
H5 = (p1**2 + p2**2) / 2 + S5[1]
J = sp.Matrix([[sp.diff(f, v) for v in (q1, q2, p1, p2)] for f in (H5, sp.expand(tau(G5) * G5))])
out["S5 some minor nonzero"] = any(sp.expand(J[:, [a, b]].det()) != 0 for a, b in itertools.combinations(range(4), 2))
H2 = (p1**2 + p2**2) / 2 + S2[1]
J2 = sp.Matrix([[sp.diff(f, v) for v in (q1, q2, p1, p2)] for f in (H2, q1 * p2 - q2 * p1)])
out["S2 (p1,p2) minor"] = sp.expand(J2[:, [2, 3]].det())
out["reducible"] = sp.expand((p1 - q2**2) * (p1 + q2**2) / 2)

# Hand elimination on S1 at gamma-degree 4: ansatz {p1,p2,q1^2,q1q2,q2^2}, Lambda = l*q1^2 ... r-2 = 2 so Lambda = l1*q1 + l2*q2.
l1, l2 = sp.symbols("l1 l2")
f = sp.symbols("f1:6")
F = f[0] * p1 + f[1] * p2 + f[2] * q1**2 + f[3] * q1 * q2 + f[4] * q2**2
rel = sp.Poly(lie(*S1, F) - (l1 * q1 + l2 * q2) * F, q1, q2, p1, p2)
M = sp.Matrix([[sp.diff(c, fk) for fk in f] for c in rel.coeffs()])
# Exhaustive branching: the kernel is nonzero iff all 5x5 minors vanish.
minors = [sp.factor(M.extract(list(rows), list(range(5))).det()) for rows in itertools.combinations(range(M.rows), 5)]
minors = [x for x in minors if x != 0]
out["S1 branch solutions"] = sp.solve(minors, [l1, l2], dict=True)
for sol in out["S1 branch solutions"]:
    for vec in M.subs(sol).nullspace():
        Fk = sp.expand(sum(c * b for c, b in zip(vec, [p1, p2, q1**2, q1 * q2, q2**2])))
        out[f"S1 kernel at {sol}"] = Fk
for k, v in out.items():
    print(f"{k}: {v}")
