#!/usr/bin/env python3
"""Independent sympy computation of the hand-derived fixture values.

Vector fields are tuples of sympy expressions; the bracket is computed as
operator composition on the coordinate functions, D(E(x_i)) - E(D(x_i)),
which is a different route from the coefficient-wise C++ implementation.
Prints one `name = value` line per fixture; the C++ tests freeze these.
"""
import itertools
import sys

import sympy as sp

X = sp.symbols("x1:4")


def apply(D, f, n):
    return sp.expand(sum(D[i] * sp.diff(f, X[i]) for i in range(n)))


def bracket(D, E, n):
    return tuple(sp.expand(apply(D, E[i], n) - apply(E, D[i], n)) for i in range(n))


def show(D, n):
    return " + ".join(f"({sp.expand(D[i])}) d{i + 1}" for i in range(n) if D[i] != 0) or "0"


def rank(fields, n):
    monos = set()
    for F in fields:
        for i in range(n):
            for m in sp.Poly(F[i], *X[:n]).monoms() if F[i] != 0 else []:
                monos.add((i, m))
    monos = sorted(monos)
    rows = []
    for F in fields:
        row = []
        for i, m in monos:
            p = sp.Poly(F[i], *X[:n]) if F[i] != 0 else None
            row.append(p.coeff_monomial(m) if p is not None else 0)
        rows.append(row)
    return sp.Matrix(rows).rank() if rows and monos else 0


def independent(fields, n):
    kept = []
    for F in fields:
        if all(c == 0 for c in F):
            continue
        if rank(kept + [F], n) > len(kept):
            kept.append(F)
    return kept


def main():
    x1, x2, x3 = X
    out = {}
    out["mul(x1+1,x1-1)"] = sp.expand((x1 + 1) * (x1 - 1))
    out["partial(x1x2^2+x2+x1,2)"] = sp.diff(x1 * x2**2 + x2 + x1, x2)
    out["diff_multi(x1^2x2,(2,1))"] = sp.diff(x1**2 * x2, x1, 2, x2, 1)
    out["apply(x2d1+d2, x1x2)"] = apply((x2, 1), x1 * x2, 2)
    out["[x1^2d2, x2d1]"] = show(bracket((0, x1**2), (x2, 0), 2), 2)
    out["[E2, x1^2d2]"] = show(bracket((x1, x2), (0, x1**2), 2), 2)
    out["[2x1d1+5x2d2, x1d2]"] = show(bracket((2 * x1, 5 * x2), (0, x1), 2), 2)
    b1 = bracket((1, 0), (0, x1**2), 2)
    b2 = bracket((1, 0), b1, 2)
    out["[d1^2, x1^2d2]"] = show(b2, 2)
    out["[d1^3, x1^2d2]"] = show(bracket((1, 0), b2, 2), 2)
    ED = bracket((0, x1), (x2, 0), 2)
    out["[x1d2, x2d1]"] = show(ED, 2)
    out["[[x1d2,x2d1],x1d2]"] = show(bracket(ED, (0, x1), 2), 2)
    out["[d1, x1^2d1]"] = show(bracket((1,), (x1**2,), 1), 1)
    out["rank{E2, x1d1-x2d2, x2d2}"] = rank([(x1, x2), (x1, -x2), (0, x2)], 2)
    f = x1**2 * x2 + x1
    out["const_extract(x1^2x2+x1)"] = sp.diff(f, x1, 2, x2, 1)
    out["const_extract(3x2^3)"] = sp.diff(3 * x2**3, x2, 3)
    out["lin_extract(x1x2^2+x2+x1,2)"] = sp.diff(x1 * x2**2 + x2 + x1, x1, 1, x2, 1)
    out["lin_extract(x1^2x2+x1,1)"] = sp.diff(f, x1, 1, x2, 1)
    out["flatten(x2^3d1,2,1)"] = sp.diff(x2**3, x2, 2)
    out["flatten(x1^3d1,1,2)"] = sp.diff(x1**3, x1, 1)
    # lnd chain for x1d2 + d1
    D = (1, x1)
    for i, xi in enumerate((x1, x2)):
        chain, cur = [xi], xi
        while cur != 0:
            cur = apply(D, cur, 2)
            chain.append(cur)
        out[f"lnd_chain(x{i + 1})"] = chain
    # sl2 check, k=2, T1 = x1 d1 + d2
    T1, T2, T3 = (x1, 1), (0, -x2**2), (0, -2 * x2)
    out["sl2 proj [T1,T2]"] = bracket(T1, T2, 2)[1]
    out["sl2 proj [T3,T1]"] = bracket(T3, T1, 2)[1]
    out["sl2 proj [T3,T2]"] = bracket(T3, T2, 2)[1]
    # derived chain search in s_n, generator degree <= 2n
    for n in (1, 2):
        gens = []
        for i in range(n):
            for deg in range(0, 2 * n + 1):
                for e in itertools.product(range(deg + 1), repeat=i):
                    if sum(e) > deg:
                        continue
                    base = sp.Mul(*[X[j] ** e[j] for j in range(i)])
                    for t in (0, 1):
                        if sum(e) + t == deg:
                            F = [0] * n
                            F[i] = base * X[i] ** t
                            gens.append(tuple(F))
        level = independent(gens, n)
        dims = [len(level)]
        for _ in range(2 * n):
            level = independent([bracket(a, b, n) for a, b in itertools.combinations(level, 2)], n)
            dims.append(len(level))
        out[f"s_{n} truncated derived dims"] = dims
    for k, v in out.items():
        print(f"{k} = {v}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
