#!/usr/bin/env python3
"""Build the bundled newform dataset with PARI/GP (via cypari2).

Emits one canonical JSON record per line for every weight-2, trivial-character
newform orbit of level <= --max-level and dimension <= --max-dim. Coefficient
fields are reduced with polredabs and eigenvalues are stored in power-basis
coordinates of the reduced polynomial. Orbits are labelled the way LMFDB does:
sorted by dimension, then lexicographically by the trace form.
"""
import argparse
import json
import sys
from fractions import Fraction
from math import lcm

import cypari2

pari = cypari2.Pari()
pari.allocatemem(4 * 10**9, silent=True)


def sturm_bound(level):
    num, den = level, 1
    for p in pari.factor(level)[0]:
        p = int(p)
        num, den = num * (p + 1), den * p
    return (2 * num // den) // 12


def primes_upto(b):
    return [int(p) for p in pari.primes([2, b])]


def label_suffix(i):
    s = ""
    i += 1
    while i > 0:
        i, r = divmod(i - 1, 26)
        s = chr(ord("a") + r) + s
    return s


def coords(value, g):
    """Power-basis coordinates (numerators, denominator) of a PARI element."""
    if g == 1 or pari.type(value) in ("t_INT", "t_FRAC"):
        c = [Fraction(str(value))] + [Fraction(0)] * (g - 1)
    else:
        poly = pari.lift(value)
        c = [Fraction(str(pari.polcoef(poly, j, "y"))) for j in range(g)]
    den = lcm(*[x.denominator for x in c])
    return [int(x * den) for x in c], den


def forms_at_level(level, max_dim):
    out = []
    mf = pari.mfinit([level, 2], 0)
    if int(pari.mfdim(mf)) == 0:
        return out
    bound = max(2 * sturm_bound(level), 100)
    ntr = 40
    basis = pari.mfeigenbasis(mf)
    polys = pari.mffields(mf)
    for form, poly in zip(basis, polys):
        g = int(pari.poldegree(poly))
        if g > max_dim:
            # still needed for label ordering
            out.append({"dimension": g, "traces": None, "skip": True})
            continue
        if g == 1:
            red, rootmap = pari("y"), None
        else:
            red, rootmap = pari.polredabs(poly, 1)
        coefs = pari.mfcoefs(form, max(bound, ntr))

        def remap(v):
            if rootmap is None or pari.type(v) in ("t_INT", "t_FRAC"):
                return v
            lifted = pari.lift(v)
            return pari.Mod(pari.subst(lifted, "y", pari.lift(rootmap)), red)

        traces = []
        for n in range(1, ntr + 1):
            v = coefs[n]
            traces.append(int(g * v) if pari.type(v) in ("t_INT", "t_FRAC")
                          else int(pari.trace(v)))
        eig = []
        for p in primes_upto(bound):
            num, den = coords(remap(coefs[p]), g)
            eig.append({"p": p, "num": num, "den": den})
        field_poly = [int(pari.polcoef(red, j, "y")) for j in range(g + 1)]
        out.append({"dimension": g, "traces": traces, "skip": False,
                    "field_poly": field_poly, "eigenvalues": eig,
                    "data_bound": bound})
    # skipped orbits have no traces; sort them after everything of smaller dim
    out.sort(key=lambda r: (r["dimension"], r["traces"] or []))
    records = []
    for i, r in enumerate(out):
        if r["skip"]:
            continue
        records.append({
            "label": f"{level}.2.a.{label_suffix(i)}",
            "level": level,
            "weight": 2,
            "char_trivial": True,
            "dimension": r["dimension"],
            "field_poly": r["field_poly"],
            "eigenvalues": r["eigenvalues"],
            "data_bound": r["data_bound"],
        })
    return records


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--min-level", type=int, default=1)
    ap.add_argument("--max-level", type=int, default=500)
    ap.add_argument("--max-dim", type=int, default=3)
    ap.add_argument("--out", default="-")
    args = ap.parse_args()
    out = sys.stdout if args.out == "-" else open(args.out, "w")
    for level in range(args.min_level, args.max_level + 1):
        for rec in forms_at_level(level, args.max_dim):
            out.write(json.dumps(rec, separators=(",", ":")) + "\n")
        if level % 50 == 0:
            print(f"level {level}", file=sys.stderr)
    out.close()


if __name__ == "__main__":
    main()
