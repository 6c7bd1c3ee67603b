"""Independent sympy oracle. Recomputes derivation dimensions, Z^2 dimensions,
identity memberships and degeneration limits straight from the transcribed
tables and prints them; the C++ tests freeze the values this prints."""
import itertools
import sys

import sympy as sp

from algebras import ALG, al, be, t, tensor


def mul(n, T, x, y):
    return [sp.expand(sum(x[i] * y[j] * T[i][j][k] for i in range(n) for j in range(n))) for k in range(n)]


def der_dim(n, T):
    D = sp.Matrix(n, n, lambda i, j: sp.Symbol(f"d{i}{j}"))
    unknowns = list(D)
    eqs = []
    E = [[1 if a == b else 0 for a in range(n)] for b in range(n)]
    for i in range(n):
        for j in range(n):
            # D(e_i e_j) = D(e_i) e_j + e_i D(e_j); D acts on column vectors.
            prod = [T[i][j][k] for k in range(n)]
            lhs = list(D * sp.Matrix(prod))
            De_i = list(D[:, i])
            De_j = list(D[:, j])
            r1 = mul(n, T, De_i, E[j])
            r2 = mul(n, T, E[i], De_j)
            for k in range(n):
                eqs.append(sp.expand(lhs[k] - r1[k] - r2[k]))
    M = sp.Matrix([[sp.diff(e, u) for u in unknowns] for e in eqs])
    return n * n - M.rank(simplify=True)


def z2_dim(n, T):
    syms = {}
    B = []
    for i in range(n):
        Bi = sp.zeros(n, n)
        for l in range(n):
            for m in range(l + 1, n):
                s = sp.Symbol(f"b{i}_{l}{m}")
                syms[s] = 1
                Bi[l, m] = s
                Bi[m, l] = -s
        B.append(Bi)
    unknowns = list(syms)

    def theta(x, y):
        xv, yv = sp.Matrix(x), sp.Matrix(y)
        return [(xv.T * B[i] * yv)[0] for i in range(n)]

    E = [[1 if a == b else 0 for a in range(n)] for b in range(n)]
    eqs = []
    for a, b, c in itertools.product(range(n), repeat=3):
        xy = [T[a][b][k] for k in range(n)]
        lhs = theta(xy, E[c])
        r1 = mul(n, T, theta(E[a], E[c]), E[b])
        r2 = mul(n, T, E[a], theta(E[b], E[c]))
        eqs += [sp.expand(lhs[k] - r1[k] - r2[k]) for k in range(n)]
    M = sp.Matrix([[sp.diff(e, u) for u in unknowns] for e in eqs])
    return len(unknowns) - M.rank()


def change_basis(n, T, E):
    E = sp.Matrix(E)
    Ei = E.inv()
    rows = [list(E.row(i)) for i in range(n)]
    out = [[[0] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            p = sp.Matrix([mul(n, T, rows[i], rows[j])])
            w = p * Ei
            for k in range(n):
                out[i][j][k] = sp.simplify(w[k])
    return out


def limit_eq(n, src, E, tgt):
    C = change_basis(n, src, E)
    ok = True
    for i, j, k in itertools.product(range(n), repeat=3):
        v = sp.limit(C[i][j][k], t, 0)
        if sp.simplify(v - tgt[i][j][k]) != 0:
            ok = False
            print("   mismatch", i + 1, j + 1, k + 1, C[i][j][k], "->", v, "expected", tgt[i][j][k])
    return ok


def vec(n, coeffs):
    v = [0] * n
    for k, x in coeffs.items():
        v[k - 1] = x
    return v


WITNESSES = [
    ("A30", None, "A27", None, [{1: t, 2: 1, 3: -1}, {2: -t, 3: t}, {3: t**2}]),
    ("A30", None, "A28", None, [{1: t, 2: 1}, {2: -t}, {3: -t}]),
    ("J03", None, "J06", None, [{1: t**-2}, {2: t**-4}, {3: t**-3}, {4: t**-6}]),
    ("J18", None, "J01", None, [{1: 1}, {2: 1}, {3: 1}, {4: 1 / t}]),
    ("A02", {al: 1 / t}, "A28", None, [{1: 1, 2: 1}, {3: 2}, {1: -t, 2: t}]),
    ("A19", None, "A13", None, [{1: 1, 3: 1}, {3: 1}, {2: t}]),
    ("A19", None, "A18", None, [{1: 1}, {3: 1}, {2: t}]),
    ("A28", None, "A20", None, [{2: t}, {1: t}, {3: 1}]),
    ("A19", {al: al / 2}, "A02", None, [{1: t}, {2: -2 * t**2, 3: 1}, {2: t**3}]),
    ("A19", None, "A13", None, [{1: 1, 2: 1}, {3: 1}, {2: t}]),
    ("A33", {al: be}, "A14", None, [{1: 1, 2: be - al, 3: -al}, {3: t**2}, {2: t, 3: t}]),
    ("A17", {al: (-2 - t) / (2 * t)}, "A29", None, [{1: 1, 2: 1}, {2: t}, {3: 1}]),
    ("A33", {al: (2 * al - t) / (2 + 2 * t)}, "A31", None, [{1: 1 + t, 3: -(al + t / 2)}, {3: -t**2}, {2: 1, 3: t}]),
    ("A32", None, "A33", None, [{1: 1, 3: -al}, {3: t}, {2: al + t**2, 3: 1}]),
]


def main():
    print("== derivation dims")
    for name in sorted(ALG):
        n, T = tensor(name)
        print(name, der_dim(n, T))
    specials = {
        "A02[0]": ("A02", {al: 0}),
        "A13[0]": ("A13", {al: 0}),
        "A14[0,0]": ("A14", {al: 0, be: 0}),
        "A17[0]": ("A17", {al: 0}),
        "A18[0]": ("A18", {al: 0}),
        "A19[0]": ("A19", {al: 0}),
        "A17[1/2]": ("A17", {al: sp.Rational(1, 2)}),
        "A19[1/2]": ("A19", {al: sp.Rational(1, 2)}),
        "A19[-1/2]": ("A19", {al: -sp.Rational(1, 2)}),
        "A14[0,1/2]": ("A14", {al: 0, be: sp.Rational(1, 2)}),
        "A14[0,-1/2]": ("A14", {al: 0, be: -sp.Rational(1, 2)}),
        "A14[1/2,-1/2]": ("A14", {al: sp.Rational(1, 2), be: -sp.Rational(1, 2)}),
        "A14[1/2,1/2]": ("A14", {al: sp.Rational(1, 2), be: sp.Rational(1, 2)}),
        "A14[-1/2,-1/2]": ("A14", {al: -sp.Rational(1, 2), be: -sp.Rational(1, 2)}),
    }
    for name, (base, s) in specials.items():
        n, T = tensor(base, s)
        print(name, der_dim(n, T))
    print("== z2 dims")
    for name in ["A01", "A03", "A04", "A05", "A06", "A07", "A08", "A09", "A10", "A11", "A12", "A15", "A16"]:
        n, T = tensor(name)
        print(name, z2_dim(n, T))
    for name in ["A02[0]", "A13[0]", "A14[0,0]", "A17[0]", "A18[0]", "A19[0]"]:
        base, s = specials[name]
        n, T = tensor(base, s)
        print(name, z2_dim(n, T))
    print("== witnesses")
    for src, idx, tgt, tsub, E in WITNESSES:
        n, S = tensor(src, idx)
        _, Tg = tensor(tgt, tsub)
        Em = [vec(n, r) for r in E]
        print(src, "->", tgt, limit_eq(n, S, Em, Tg))
        sys.stdout.flush()


if __name__ == "__main__":
    main()
