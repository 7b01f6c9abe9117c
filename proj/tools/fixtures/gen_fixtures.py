#!/usr/bin/env python3
"""Regenerate the bundled group and representation fixtures under data/.

Small groups are written directly from permutation or matrix generators.
The Phi-family p-groups (p = 3) come from their power-commutator
presentations: class >= 3 families via sympy coset enumeration on the
trivial subgroup (regular permutation representation), class-2 families via
an explicit bilinear cocycle on F_3-vectors. Every presentation relation is
re-checked on the generated permutations before a file is written.

Usage: gen_fixtures.py [--skip-slow] OUTDIR
"""
import argparse
import itertools
import json
import os
from fractions import Fraction
from math import comb

P = 3


def write(path, obj):
    with open(path, "w") as f:
        json.dump(obj, f, separators=(",", ":"))
        f.write("\n")


def perm_file(degree, gens, names=None, description=None):
    obj = {"kind": "permutation", "degree": degree, "generators": [list(g) for g in gens]}
    if names:
        obj["names"] = names
    if description:
        obj["description"] = description
    return obj


def compose(p, q):
    """Product p*q = p o q (apply q first), matching the library convention."""
    return tuple(p[q[i]] for i in range(len(p)))


def inverse(p):
    r = [0] * len(p)
    for i, v in enumerate(p):
        r[v] = i
    return tuple(r)


def closure(gens):
    ident = tuple(range(len(gens[0])))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = compose(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def comm(a, b):
    return compose(compose(compose(inverse(a), inverse(b)), a), b)


def power(a, k):
    r = tuple(range(len(a)))
    if k < 0:
        a, k = inverse(a), -k
    for _ in range(k):
        r = compose(r, a)
    return r


def cycle_perm(n, cycles):
    p = list(range(n))
    for cyc in cycles:
        for i, v in enumerate(cyc):
            p[v] = cyc[(i + 1) % len(cyc)]
    return tuple(p)


# ---------------------------------------------------------------- small groups

def small_groups(out):
    write(os.path.join(out, "S3.json"), perm_file(3, [cycle_perm(3, [[0, 1, 2]]), cycle_perm(3, [[0, 1]])],
                                                  ["(123)", "(12)"], "symmetric group S3"))
    write(os.path.join(out, "Z3.json"), perm_file(3, [cycle_perm(3, [[0, 1, 2]])], ["(123)"],
                                                  "cyclic group Z3 permuting three points"))
    write(os.path.join(out, "S4.json"), perm_file(4, [cycle_perm(4, [[0, 1, 2, 3]]), cycle_perm(4, [[0, 1]])],
                                                  ["(1234)", "(12)"], "symmetric group S4"))
    for n in range(3, 13):
        a = cycle_perm(n, [list(range(n))])
        b = tuple((-i) % n for i in range(n))
        write(os.path.join(out, "D%d.json" % (2 * n)), perm_file(n, [a, b], ["a", "b"],
                                                                 "dihedral group of order %d" % (2 * n)))
    # Q8 via its regular representation on the 8 quaternion units.
    units = [(s, u) for u in "1ijk" for s in (1, -1)]
    table = {("1", x): (1, x) for x in "1ijk"}
    table.update({(x, "1"): (1, x) for x in "1ijk"})
    table.update({("i", "i"): (-1, "1"), ("j", "j"): (-1, "1"), ("k", "k"): (-1, "1"),
                  ("i", "j"): (1, "k"), ("j", "k"): (1, "i"), ("k", "i"): (1, "j"),
                  ("j", "i"): (-1, "k"), ("k", "j"): (-1, "i"), ("i", "k"): (-1, "j")})

    def qmul(x, y):
        s, u = table[(x[1], y[1])]
        return (x[0] * y[0] * s, u)

    idx = {u: n for n, u in enumerate(units)}
    gens = [tuple(idx[qmul((1, g), u)] for u in units) for g in "ij"]
    assert len(closure(gens)) == 8
    write(os.path.join(out, "Q8.json"), perm_file(8, gens, ["i", "j"], "quaternion group Q8"))
    write(os.path.join(out, "SL2F3.json"),
          {"kind": "matrix", "prime": 3, "dim": 2, "generators": [[1, 1, 0, 1], [1, 0, 1, 1]],
           "names": ["u", "l"], "description": "SL(2,3), order 24"})


# ------------------------------------------------------- presentations via sympy

def regular_perms(gen_names, relators):
    from sympy.combinatorics.fp_groups import FpGroup
    from sympy.combinatorics.free_groups import free_group

    F, *xs = free_group(" ".join(gen_names))
    env = dict(zip(gen_names, xs))
    G = FpGroup(F, [r(env) for r in relators])
    C = G.coset_enumeration([])
    C.compress()
    C.standardize()
    perms = []
    for x in xs:
        # The coset table is a right action; x acts on the left as right
        # multiplication by x^-1.
        col = C.A_dict[x ** -1]
        perms.append(tuple(row[col] for row in C.table))
    return perms


def fcomm(a, b):
    return a ** -1 * b ** -1 * a * b


def maximal_class_relators(extra):
    """alpha, alpha_1..alpha_4 with [alpha_i, alpha] = alpha_{i+1} and
    alpha_j^(p) = alpha_j^p alpha_{j+1}^C(p,2) ... alpha_{j+p-1}^C(p,p)."""
    names = ["al", "a1", "a2", "a3", "a4"]

    def ppow(e, j):
        w = e["a%d" % j] ** P
        for k in range(2, P + 1):
            if j + k - 1 <= 4:
                w = w * e["a%d" % (j + k - 1)] ** comb(P, k)
        return w

    rels = [lambda e, i=i: fcomm(e["a%d" % i], e["al"]) * e["a%d" % (i + 1)] ** -1 for i in (1, 2, 3)]
    rels.append(lambda e: fcomm(e["a4"], e["al"]))
    rels.append(lambda e: e["al"] ** P)
    rels += [lambda e, j=j: ppow(e, j) for j in (1, 2, 3, 4)]
    for i, j in itertools.combinations(range(1, 5), 2):
        if (i, j) in extra:
            k = extra[(i, j)]
            rels.append(lambda e, i=i, j=j, k=k: fcomm(e["a%d" % i], e["a%d" % j]) * e["a%d" % k] ** -1)
        else:
            rels.append(lambda e, i=i, j=j: fcomm(e["a%d" % i], e["a%d" % j]))
    return names, rels


def central_rels(names, nontrivial):
    """[x, y] = 1 for every generator pair not listed in `nontrivial`."""
    rels = []
    for x, y in itertools.combinations(names, 2):
        if (x, y) in nontrivial or (y, x) in nontrivial:
            continue
        rels.append(lambda e, x=x, y=y: fcomm(e[x], e[y]))
    return rels


def phi_presentations():
    out = {}
    # Phi4(1^5): [alpha_i, alpha] = beta_i.
    names = ["al", "a1", "a2", "b1", "b2"]
    rels = [lambda e: fcomm(e["a1"], e["al"]) * e["b1"] ** -1,
            lambda e: fcomm(e["a2"], e["al"]) * e["b2"] ** -1]
    rels += [lambda e, g=g: e[g] ** P for g in names]
    rels += central_rels(names, {("a1", "al"), ("a2", "al")})
    out["Phi4"] = (names, rels, "Phi4(1^5) at p=3")
    # Phi5(1^5): [alpha_1, alpha_2] = [alpha_2, alpha_3] = beta.
    names = ["a1", "a2", "a3", "a4", "b"]
    rels = [lambda e: fcomm(e["a1"], e["a2"]) * e["b"] ** -1,
            lambda e: fcomm(e["a2"], e["a3"]) * e["b"] ** -1]
    rels += [lambda e, g=g: e[g] ** P for g in names]
    rels += central_rels(names, {("a1", "a2"), ("a2", "a3")})
    out["Phi5"] = (names, rels, "Phi5(1^5) at p=3")
    # Phi6(1^5): [alpha_1, alpha_2] = beta, [beta, alpha_i] = beta_i.
    names = ["a1", "a2", "b", "b1", "b2"]
    rels = [lambda e: fcomm(e["a1"], e["a2"]) * e["b"] ** -1,
            lambda e: fcomm(e["b"], e["a1"]) * e["b1"] ** -1,
            lambda e: fcomm(e["b"], e["a2"]) * e["b2"] ** -1]
    rels += [lambda e, g=g: e[g] ** P for g in names]
    rels += central_rels(names, {("a1", "a2"), ("b", "a1"), ("b", "a2")})
    out["Phi6"] = (names, rels, "Phi6(1^5) at p=3")
    # Phi7(1^5): [alpha_i, alpha] = alpha_{i+1}, [alpha_1, beta] = alpha_3.
    names = ["al", "a1", "a2", "a3", "b"]
    rels = [lambda e: fcomm(e["a1"], e["al"]) * e["a2"] ** -1,
            lambda e: fcomm(e["a2"], e["al"]) * e["a3"] ** -1,
            lambda e: fcomm(e["a1"], e["b"]) * e["a3"] ** -1,
            lambda e: e["al"] ** P,
            lambda e: e["a1"] ** P * e["a2"] ** comb(P, 2) * e["a3"] ** comb(P, 3),
            lambda e: e["a2"] ** P, lambda e: e["a3"] ** P, lambda e: e["b"] ** P]
    rels += central_rels(names, {("a1", "al"), ("a2", "al"), ("a1", "b")})
    out["Phi7"] = (names, rels, "Phi7(1^5) at p=3")
    names, rels = maximal_class_relators({})
    out["Phi9"] = (names, rels, "Phi9(1^5) at p=3")
    names, rels = maximal_class_relators({(1, 2): 4})
    out["Phi10"] = (names, rels, "Phi10(1^5) at p=3")
    return out


def check_relators(names, rels, perms):
    """Evaluate each relator on the permutations through a tiny word shim."""

    class W:
        def __init__(self, p):
            self.p = p

        def __mul__(self, o):
            return W(compose(self.p, o.p))

        def __pow__(self, k):
            return W(power(self.p, k))

    env = {n: W(p) for n, p in zip(names, perms)}
    ident = tuple(range(len(perms[0])))
    for r in rels:
        assert r(env).p == ident


# ------------------------------------------------------------ class-2 cocycle

def class2_group(ngen, brackets, central_names):
    """Group on (a, c) in F_p^ngen x F_p^m with (a,c)(a',c') = (a+a', c+c'+B(a,a')).

    B(e_j, e_i) = -brackets[(i, j)] for i < j and zero otherwise, which makes the
    commutator [g_i, g_j] equal to the central vector brackets[(i, j)]."""
    m = len(central_names)
    elems = list(itertools.product(range(P), repeat=ngen + m))
    index = {e: k for k, e in enumerate(elems)}

    def bil(a, b):
        c = [0] * m
        for (i, j), vec in brackets.items():
            coef = a[j] * b[i]
            for t in range(m):
                c[t] -= coef * vec[t]
        return c

    def mul(x, y):
        a = [(x[i] + y[i]) % P for i in range(ngen)]
        extra = bil(x[:ngen], y[:ngen])
        c = [(x[ngen + t] + y[ngen + t] + extra[t]) % P for t in range(m)]
        return tuple(a + c)

    basis = []
    for i in range(ngen + m):
        v = [0] * (ngen + m)
        v[i] = 1
        basis.append(tuple(v))
    perms = [tuple(index[mul(g, e)] for e in elems) for g in basis]
    return perms


def phi11():
    # [alpha_1, alpha_2] = beta_3, [alpha_2, alpha_3] = beta_1, [alpha_3, alpha_1] = beta_2.
    names = ["a1", "a2", "a3", "b1", "b2", "b3"]
    brackets = {(0, 1): (0, 0, 1), (1, 2): (1, 0, 0), (0, 2): (0, P - 1, 0)}
    perms = class2_group(3, brackets, ["b1", "b2", "b3"])
    g = dict(zip(names, perms))
    assert comm(g["a1"], g["a2"]) == g["b3"]
    assert comm(g["a2"], g["a3"]) == g["b1"]
    assert comm(g["a3"], g["a1"]) == g["b2"]
    for n in names:
        assert power(g[n], P) == tuple(range(len(perms[0])))
    return names, perms


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("outdir")
    ap.add_argument("--skip-slow", action="store_true")
    args = ap.parse_args()
    groups = os.path.join(args.outdir, "groups")
    reps = os.path.join(args.outdir, "reps")
    os.makedirs(groups, exist_ok=True)
    os.makedirs(reps, exist_ok=True)
    small_groups(groups)
    write_reps(reps)
    names, perms = phi11()
    write(os.path.join(groups, "Phi11_p3.json"),
          perm_file(len(perms[0]), perms, names, "Phi11(1^6) at p=3, order 729"))
    if args.skip_slow:
        return
    for key, (names, rels, desc) in phi_presentations().items():
        perms = regular_perms(names, rels)
        check_relators(names, rels, perms)
        assert len(perms[0]) == P ** 5, (key, len(perms[0]))
        write(os.path.join(groups, "%s_p3.json" % key), perm_file(len(perms[0]), perms, names, desc))
        print(key, "ok", flush=True)


# -------------------------------------------------------------- representations

def rat(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else "%d/%d" % (x.numerator, x.denominator)


def perm_matrix(p):
    n = len(p)
    # column j is the image of basis vector j: x_j -> x_{p(j)}
    return [[1 if p[j] == i else 0 for j in range(n)] for i in range(n)]


def rep_file(dim, m, mats, variables=None, description=None):
    def entry(v):
        if isinstance(v, dict):
            return v
        return rat(v)

    obj = {"dim": dim, "m": m, "generators": [[entry(v) for row in M for v in row] for M in mats]}
    if variables:
        obj["variables"] = variables
    if description:
        obj["description"] = description
    return obj


def zeta_power(m, k):
    """zeta_m^k as a Cyclotomic object in the raw power basis (reduced by the reader)."""
    coeffs = ["0"] * m
    coeffs[k % m] = "1"
    return {"m": m, "coeffs": coeffs}


def write_reps(out):
    write(os.path.join(out, "Z3_perm.json"),
          rep_file(3, 1, [perm_matrix(cycle_perm(3, [[0, 1, 2]]))], ["x", "y", "z"],
                   "Z3 cyclically permuting x, y, z"))
    write(os.path.join(out, "S3_perm.json"),
          rep_file(3, 1, [perm_matrix(cycle_perm(3, [[0, 1, 2]])), perm_matrix(cycle_perm(3, [[0, 1]]))],
                   ["x", "y", "z"], "S3 permuting x, y, z"))
    # S4 standard representation on the sum-zero hyperplane, basis f_i = e_i - e_4.
    # e_k - e_4 images: write v = sum c_i e_i with sum c_i = 0, coordinates c_1..c_3.
    def std_matrix(p):
        M = [[0] * 3 for _ in range(3)]
        for j in range(3):
            v = [0] * 4
            v[p[j]] += 1
            v[p[3]] -= 1
            for i in range(3):
                M[i][j] = v[i]
        return M
    gens = [cycle_perm(4, [[0, 1, 2, 3]]), cycle_perm(4, [[0, 1]])]
    write(os.path.join(out, "S4_standard.json"),
          rep_file(3, 1, [std_matrix(g) for g in gens], ["x", "y", "z"], "standard representation of S4"))
    for n in range(3, 13):
        a = [[zeta_power(n, 1), "0"], ["0", zeta_power(n, n - 1)]]
        b = [["0", "1"], ["1", "0"]]
        write(os.path.join(out, "D%d_pi_omega.json" % (2 * n)),
              rep_file(2, n, [a, b], ["x", "y"], "pi_omega of D%d with omega = zeta_%d" % (2 * n, n)))


if __name__ == "__main__":
    main()
