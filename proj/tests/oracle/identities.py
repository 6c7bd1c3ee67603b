"""Identity oracle: evaluates each identity on generic symbolic vectors with
sympy and prints which algebras satisfy it."""
import sympy as sp

from algebras import ALG, tensor


def gen(n, name):
    return [sp.Symbol(f"{name}{i}") for i in range(n)]


def make(n, T):
    def m(x, y):
        return [sp.expand(sum(x[i] * y[j] * T[i][j][k] for i in range(n) for j in range(n) if T[i][j][k] != 0)) for k in range(n)]
    return m


def sub(u, v):
    return [sp.expand(a - b) for a, b in zip(u, v)]


def add(*vs):
    return [sp.expand(sum(c)) for c in zip(*vs)]


def checks(n, T):
    m = make(n, T)
    x, y, z, w = (gen(n, s) for s in "xyzw")
    ass = lambda a, b, c: sub(m(m(a, b), c), m(a, m(b, c)))
    circ = lambda a, b: [sp.expand(v / 2) for v in add(m(a, b), m(b, a))]
    br = lambda a, b: [sp.expand(v / 2) for v in sub(m(a, b), m(b, a))]
    zero = lambda v: all(sp.simplify(q) == 0 for q in v)
    res = {}
    res["flexible"] = zero(ass(x, y, x))
    res["jordan"] = zero(ass(m(x, x), y, x))
    res["commutative"] = zero(sub(m(x, y), m(y, x)))
    res["anticommutative"] = zero(m(x, x))
    res["associative"] = zero(ass(x, y, z))
    res["standard1"] = zero(sub(add(ass(x, y, z), ass(z, x, y)), ass(x, z, y)))
    res["standard2"] = zero(add(ass(x, y, m(w, z)), ass(w, y, m(x, z)), ass(z, y, m(w, x))))
    cass = sub(circ(circ(x, y), z), circ(x, circ(y, z)))
    res["kokoris"] = res["flexible"] and zero(cass)
    res["compat"] = zero(sub(br(circ(x, y), z), add(circ(br(x, z), y), circ(x, br(y, z)))))
    return res


if __name__ == "__main__":
    for name in sorted(ALG):
        n, T = tensor(name)
        r = checks(n, T)
        print(name, " ".join(k for k, v in r.items() if v))
