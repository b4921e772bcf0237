#!/usr/bin/env python3
"""Compares CLI output against the brute-force oracle in pentagon_oracle.py.

usage: cross_check.py <fusioninv executable> <data directory>

Checks, per fixture ring: the Gamma and Phi sets, the pentagon equations as
multisets of monomial terms, the Fibonacci exponent matrix recomputed from
the t-map definition, and pentagon residuals of the shipped solution files.
"""
import collections
import json
import os
import re
import subprocess
import sys

import mpmath

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))
import pentagon_oracle as oracle  # noqa: E402

RINGS = {
    "trivial": (oracle.trivial_rules, {"1": "1"}),
    "fibonacci": (oracle.fib_rules, {"1": "1", "t": "tau"}),
    "z3": (oracle.z3_rules, {"0": "1", "1": "w", "2": "w2"}),
    "repds3": (oracle.repds3_rules, {"1": "1", "e": "eps", "b1": "b1", "b2": "b2", "b3": "b3",
                                     "b4": "b4", "ap": "a+", "am": "a-"}),
}

failures = []


def check(cond, msg):
    if not cond:
        failures.append(msg)
        print("FAIL:", msg)


def cli(exe, *args):
    out = subprocess.run([exe, *args], check=True, capture_output=True, text=True)
    return out.stdout


def phi_name(t):
    a, b, c, d, e, f = t
    return f"Phi[{a},{b},{c}; {d}; {e},{f}]"


def rename(mapping, t):
    return tuple(mapping[x] for x in t)


def term_key(term):
    return tuple(sorted(term))


def equation_key(lhs, rhs):
    return (tuple(sorted(term_key(t) for t in lhs)), tuple(sorted(term_key(t) for t in rhs)))


def check_ring(exe, data, name):
    rules, mapping = RINGS[name]
    labels, n = rules()
    ring = os.path.join(data, f"{name}.ring.json")

    gamma = {tuple(g) for g in json.loads(cli(exe, "--json", "gamma", ring))["gamma"]}
    check(gamma == {rename(mapping, t) for t in n}, f"{name}: gamma set differs")

    phi_cli = [tuple(p[k] for k in "abcdef") for p in json.loads(cli(exe, "--json", "phi", ring))["phi"]]
    check(len(phi_cli) == len(set(phi_cli)), f"{name}: duplicate phi entries")
    phi_oracle = {rename(mapping, t) for t in oracle.phi(labels, n)}
    check(set(phi_cli) == phi_oracle, f"{name}: phi set differs")

    eqs = oracle.pentagons(labels, n)
    if name == "repds3":
        count = json.loads(cli(exe, "--json", "pentagon", ring))["count"]
        check(count == len(eqs), f"{name}: {count} pentagon equations, oracle {len(eqs)}")
        return len(gamma), len(phi_cli), count
    dump = json.loads(cli(exe, "--json", "pentagon", "--dump", ring))
    ours = collections.Counter(equation_key(e["lhs"], e["rhs"]) for e in dump["equations"])
    theirs = collections.Counter(
        equation_key([[phi_name(rename(mapping, x)) for x in t] for t in lhs],
                     [[phi_name(rename(mapping, x)) for x in t] for t in rhs])
        for lhs, rhs in eqs)
    check(ours == theirs, f"{name}: pentagon equations differ")
    return len(gamma), len(phi_cli), dump["count"]


def fib_matrix(exe, data):
    labels, n = oracle.fib_rules()
    mapping = RINGS["fibonacci"][1]
    gamma = sorted(n, key=lambda t: tuple(labels.index(x) for x in t))
    col = {g: i for i, g in enumerate(gamma)}
    expected = {}
    for a, b, c, d, e, f in oracle.phi(labels, n):
        row = [0] * len(gamma)
        row[col[(a, b, e)]] += 1
        row[col[(e, c, d)]] += 1
        row[col[(b, c, f)]] -= 1
        row[col[(a, f, d)]] -= 1
        expected[phi_name(rename(mapping, (a, b, c, d, e, f)))] = row
    tsv = cli(exe, "matrix", os.path.join(data, "fibonacci.ring.json"))
    names = re.findall(r"^# row \d+: (.*)$", tsv, re.M)
    rows = [[int(x) for x in line.split("\t")] for line in tsv.splitlines() if line and not line.startswith("#")]
    check(len(rows) == 15 and len(names) == 15, "fibonacci: matrix shape")
    for nm, row in zip(names, rows):
        check(expected.get(nm) == row, f"fibonacci: matrix row {nm} differs")


def load_values(path, mapping):
    inverse = {v: k for k, v in mapping.items()}
    with open(path) as fh:
        doc = json.load(fh)
    return {tuple(inverse[v[k]] for k in "abcdef"): mpmath.mpc(mpmath.mpf(v["re"]), mpmath.mpf(v["im"]))
            for v in doc["values"]}


def shipped_solutions(data):
    labels, n = oracle.fib_rules()
    mapping = RINGS["fibonacci"][1]
    eqs = oracle.pentagons(labels, n)
    golden = (1 + mpmath.sqrt(5)) / 2
    for fname, p in [("fibonacci.sol.json", golden), ("yang-lee.sol.json", 1 - golden)]:
        vals = load_values(os.path.join(data, fname), mapping)
        ref = oracle.fib_values(labels, n, p)
        check(set(vals) == set(ref), f"{fname}: index set differs")
        check(max(abs(vals[k] - ref[k]) for k in ref) < mpmath.mpf("1e-40"), f"{fname}: values differ from oracle")
        check(oracle.residual(eqs, vals) < mpmath.mpf("1e-30"), f"{fname}: pentagon residual")
    vals = load_values(os.path.join(data, "fibonacci-gauged.sol.json"), mapping)
    check(oracle.residual(eqs, vals) < mpmath.mpf("1e-30"), "fibonacci-gauged: pentagon residual")
    labels, n = oracle.z3_rules()
    mapping = RINGS["z3"][1]
    eqs = oracle.pentagons(labels, n)
    for k in range(3):
        vals = load_values(os.path.join(data, f"z3-cocycle-{k}.sol.json"), mapping)
        ref = oracle.z3_values(labels, n, k)
        check(max(abs(vals[x] - ref[x]) for x in ref) < mpmath.mpf("1e-40"), f"z3-cocycle-{k}: values differ")
        check(oracle.residual(eqs, vals) < mpmath.mpf("1e-30"), f"z3-cocycle-{k}: pentagon residual")


def main():
    exe, data = sys.argv[1], sys.argv[2]
    for name in RINGS:
        print(name, "gamma/phi/pentagon:", *check_ring(exe, data, name))
    fib_matrix(exe, data)
    shipped_solutions(data)
    print("FAILED" if failures else "all cross-checks passed")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
