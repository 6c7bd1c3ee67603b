"""Isomorphism witness search oracle.

Bounded-pattern search: the map g (column j = image of e_j) is restricted to a
support pattern derived from a permutation plus optional extra entries; the
remaining unknown entries are solved from the polynomial system
g(x *_src y) = g(x) *_tgt g(y) with sympy.  Prints the first solution found
over Q(alpha) together with its determinant."""
import itertools

import sympy as sp

from algebras import al, be, tensor

CASES = [
    ("A02", None, "A02", {al: -al}),
    ("A14", None, "A14", {al: be, be: al}),
    ("A17", None, "A17", {al: -al}),
    ("A22", None, "A22", {al: 1 / al}),
    ("A24", None, "A24", {al: 1 / al}),
]


def equations(n, S, T, g):
    eqs = []
    for i in range(n):
        for j in range(n):
            lhs = [sum(g[k, m] * S[i][j][m] for m in range(n)) for k in range(n)]
            gi = [g[k, i] for k in range(n)]
            gj = [g[k, j] for k in range(n)]
            rhs = [sum(gi[a] * gj[b] * T[a][b][k] for a in range(n) for b in range(n)) for k in range(n)]
            eqs += [sp.together(sp.expand(lhs[k] - rhs[k])) for k in range(n)]
    return [sp.numer(e) for e in eqs if e != 0]


def search(src, ssub, tgt, tsub, extra=1):
    n, S = tensor(src, ssub)
    _, T = tensor(tgt, tsub)
    cells = [(i, j) for i in range(n) for j in range(n)]
    for perm in itertools.permutations(range(n)):
        base = {(perm[j], j) for j in range(n)}
        others = [c for c in cells if c not in base]
        for k in range(extra + 1):
            for add in itertools.combinations(others, k):
                support = base | set(add)
                syms = {c: sp.Symbol(f"g{c[0]}{c[1]}") for c in support}
                g = sp.Matrix(n, n, lambda i, j: syms.get((i, j), 0))
                eqs = equations(n, S, T, g)
                try:
                    sols = sp.solve(eqs, list(syms.values()), dict=True)
                except NotImplementedError:
                    continue
                for s in sols:
                    gs = g.subs(s)
                    if gs.free_symbols - {al, be}:
                        gs = gs.subs({x: 1 for x in gs.free_symbols - {al, be}})
                    d = sp.factor(gs.det())
                    if d != 0:
                        return gs.applyfunc(sp.factor), d
    return None, None


if __name__ == "__main__":
    for src, ssub, tgt, tsub in CASES:
        g, d = search(src, ssub, tgt, tsub)
        print(src, "->", tgt, tsub, ":", g, "det", d)
