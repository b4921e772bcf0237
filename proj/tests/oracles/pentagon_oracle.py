#!/usr/bin/env python3
"""Independent brute-force oracle for the fixture rings.

Enumerates F-symbol variables and pentagon instances directly from the
fusion rules (no code shared with the C++ library), substitutes the
golden-ratio Fibonacci / Yang-Lee fixtures and the Z3 cocycle fixtures at
50 significant digits, and prints the frozen counts used by the C++ tests.
Exit status is nonzero if any residual exceeds 1e-30.
"""
import itertools
import json
import sys

import mpmath

mpmath.mp.dps = 50


def fib_rules():
    labels = ["1", "t"]
    n = {("1", "1", "1"), ("1", "t", "t"), ("t", "1", "t"), ("t", "t", "1"), ("t", "t", "t")}
    return labels, n


def trivial_rules():
    return ["1"], {("1", "1", "1")}


def z3_rules():
    labels = ["0", "1", "2"]
    n = {(str(a), str(b), str((a + b) % 3)) for a in range(3) for b in range(3)}
    return labels, n


def repds3_rules():
    beta = ["b1", "b2", "b3", "b4"]
    labels = ["1", "e"] + beta + ["ap", "am"]
    n = set()

    def add(a, b, cs):
        for c in cs:
            n.add((a, b, c))

    for x in labels:
        add("1", x, [x])
        add(x, "1", [x])
    add("e", "e", ["1"])
    for b in beta:
        add("e", b, [b])
        add(b, "e", [b])
        add(b, b, ["1", "e", b])
    for i in beta:
        for j in beta:
            if i != j:
                add(i, j, [k for k in beta if k not in (i, j)])
    add("e", "ap", ["am"])
    add("ap", "e", ["am"])
    add("e", "am", ["ap"])
    add("am", "e", ["ap"])
    for b in beta:
        for a in ["ap", "am"]:
            add(b, a, ["ap", "am"])
            add(a, b, ["ap", "am"])
    for a in ["ap", "am"]:
        add(a, a, ["1"] + beta)
    add("ap", "am", ["e"] + beta)
    add("am", "ap", ["e"] + beta)
    return labels, n


def phi(labels, n):
    return [
        (a, b, c, d, e, f)
        for a, b, c, d, e, f in itertools.product(labels, repeat=6)
        if (a, b, e) in n and (e, c, d) in n and (b, c, f) in n and (a, f, d) in n
    ]


def pentagons(labels, n):
    """Returns (lhs_terms, rhs_terms) per outer tuple; a term is a list of sextuples."""
    prod = {}
    for x, y, z in n:
        prod.setdefault((x, y), []).append(z)
    out = []
    for a, b, c, d in itertools.product(labels, repeat=4):
        for f in prod.get((a, b), []):
            for i in prod.get((f, c), []):
                for e in prod.get((i, d), []):
                    for h in prod.get((c, d), []):
                        for j in prod.get((b, h), []):
                            if (a, j, e) not in n:
                                continue
                            lhs = []
                            if (f, h, e) in n:
                                lhs.append([(f, c, d, e, i, h), (a, b, h, e, f, j)])
                            rhs = []
                            for g in labels:
                                if (b, c, g) in n and (a, g, i) in n and (g, d, j) in n:
                                    rhs.append([(a, b, c, i, f, g), (a, g, d, e, i, j), (b, c, d, j, g, h)])
                            out.append((lhs, rhs))
    return out


def residual(eqs, values):
    worst = mpmath.mpf(0)
    for lhs, rhs in eqs:
        s = mpmath.mpc(0)
        for term in lhs:
            p = mpmath.mpc(1)
            for x in term:
                p *= values[x]
            s += p
        for term in rhs:
            p = mpmath.mpc(1)
            for x in term:
                p *= values[x]
            s -= p
        worst = max(worst, abs(s))
    return worst


def fib_values(labels, n, phi_value):
    sq = mpmath.sqrt(mpmath.mpc(phi_value))
    block = {("1", "1"): 1 / phi_value, ("1", "t"): 1 / sq, ("t", "1"): 1 / sq, ("t", "t"): -1 / phi_value}
    vals = {}
    for x in phi(labels, n):
        a, b, c, d, e, f = x
        if (a, b, c, d) == ("t", "t", "t", "t"):
            vals[x] = mpmath.mpc(block[(e, f)])
        else:
            vals[x] = mpmath.mpc(1)
    return vals


def z3_values(labels, n, k):
    vals = {}
    for x in phi(labels, n):
        a, b, c = int(x[0]), int(x[1]), int(x[2])
        vals[x] = mpmath.expj(2 * mpmath.pi * k * a * (b + c - (b + c) % 3) / 9)
    return vals


def main():
    report = {}
    ok = True
    for name, rules in [("trivial", trivial_rules), ("fib", fib_rules), ("z3", z3_rules)]:
        labels, n = rules()
        eqs = pentagons(labels, n)
        report[name] = {
            "gamma": len(n),
            "phi": len(phi(labels, n)),
            "pentagon": len(eqs),
            "max_rhs_terms": max(len(r) for _, r in eqs),
            "empty_lhs": sum(1 for l, _ in eqs if not l),
        }
    labels, n = fib_rules()
    eqs = pentagons(labels, n)
    golden = (1 + mpmath.sqrt(5)) / 2
    conj = (1 - mpmath.sqrt(5)) / 2
    for tag, p in [("fib_residual", golden), ("yanglee_residual", conj)]:
        r = residual(eqs, fib_values(labels, n, p))
        report[tag] = mpmath.nstr(r, 5)
        ok = ok and r < mpmath.mpf("1e-30")
    bad = fib_values(labels, n, golden)
    bad[("t", "t", "t", "t", "t", "t")] = mpmath.mpc("0.5")
    report["fib_perturbed_residual"] = mpmath.nstr(residual(eqs, bad), 8)
    labels, n = z3_rules()
    eqs = pentagons(labels, n)
    for k in range(3):
        r = residual(eqs, z3_values(labels, n, k))
        report[f"z3_k{k}_residual"] = mpmath.nstr(r, 5)
        ok = ok and r < mpmath.mpf("1e-30")
    labels, n = repds3_rules()
    report["repds3"] = {
        "gamma": len(n),
        "phi": len(phi(labels, n)),
        "gamma_dual_pairs": all((x, x, "1") in n for x in labels),
    }
    report["repds3"]["pentagon"] = len(pentagons(labels, n))
    json.dump(report, sys.stdout, indent=1)
    print()
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
