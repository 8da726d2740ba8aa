#!/usr/bin/env python3
"""Reduced Gröbner bases and dimension facts from sympy, for golden files.

Reads ideals in the localmodel text format (line 1 `vars: ...`, then one
generator per line) and writes the reduced degrevlex basis over Q in the same
format: terms in descending degrevlex order, basis elements sorted by
ascending leading monomial, variables ordered as in the input with the first
one largest.

    localmodel export --n 3 --r 1 > ideal.txt
    cas_golden.py basis ideal.txt > golden.txt
    cas_golden.py facts ideal.txt [--flatness] [--special]
"""

import argparse
import itertools
import json
import re
import sys
from fractions import Fraction

import sympy
from sympy.polys.orderings import grevlex

TOKEN = re.compile(r"[^\s+\-*^()/0-9][^\s+\-*^()/]*")


def read_ideal(text):
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("vars:"):
        raise SystemExit("input must start with a 'vars:' line")
    names = [v.strip() for v in lines[0][len("vars:"):].split(",") if v.strip()]
    symbols = sympy.symbols(f"x0:{len(names)}") if names else ()
    lookup = dict(zip(names, symbols))

    def convert(line):
        expr = TOKEN.sub(lambda m: f"x{names.index(m.group(0))}", line).replace("^", "**")
        return sympy.sympify(expr, locals={str(s): s for s in symbols})

    gens = [convert(ln) for ln in lines[1:]]
    return names, list(symbols), gens, lookup


def reduced_basis(gens, symbols, order="grevlex"):
    if not gens:
        return []
    return list(sympy.groebner(gens, *symbols, order=order, domain="QQ").exprs)


def format_poly(expr, symbols, names):
    poly = sympy.Poly(expr, *symbols, domain="QQ")
    terms = sorted(poly.terms(), key=lambda t: grevlex(t[0]), reverse=True)
    out = []
    for k, (monom, coeff) in enumerate(terms):
        c = Fraction(int(coeff.p), int(coeff.q))
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        factors = [n if e == 1 else f"{n}^{e}" for n, e in zip(names, monom) if e]
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = f"{mag}*" + "*".join(factors)
        if k == 0:
            out.append(("-" if sign == "-" else "") + body)
        else:
            out.append(f" {sign} {body}")
    return "".join(out) if out else "0"


def leading_monomial(expr, symbols):
    poly = sympy.Poly(expr, *symbols, domain="QQ")
    return max((m for m, _ in poly.terms()), key=grevlex)


def format_basis(basis, symbols, names):
    basis = sorted(basis, key=lambda g: grevlex(leading_monomial(g, symbols)))
    lines = ["vars: " + ", ".join(names)]
    lines += [format_poly(g, symbols, names) for g in basis]
    return "\n".join(lines) + "\n"


def krull_dimension(basis, symbols):
    """Largest set of variables containing no leading-monomial support."""
    if any(g.is_number and g != 0 for g in basis):
        return -1
    supports = [frozenset(i for i, e in enumerate(leading_monomial(g, symbols)) if e) for g in basis]
    n = len(symbols)
    for size in range(n, -1, -1):
        for subset in itertools.combinations(range(n), size):
            chosen = set(subset)
            if all(not s <= chosen for s in supports):
                return size
    return -1


def squarefree_leading_terms(basis, symbols):
    return all(max(leading_monomial(g, symbols)) <= 1 for g in basis)


def flat_over_pi(gens, symbols):
    """(I : π) == I, with the quotient from I ∩ (π) by lex elimination of t."""
    pi = symbols[0]
    t = sympy.Symbol("t_aux")
    ext = [t * g for g in gens] + [(1 - t) * pi]
    meet = [g for g in sympy.groebner(ext, t, *symbols, order="lex", domain="QQ").exprs if not g.has(t)]
    quotient = [sympy.cancel(g / pi) for g in meet]
    basis = sympy.groebner(gens, *symbols, order="grevlex", domain="QQ")
    return all(basis.contains(q) for q in quotient)


def main():
    parser = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("mode", choices=["basis", "facts"])
    parser.add_argument("ideal", type=argparse.FileType("r", encoding="utf-8"))
    parser.add_argument("--flatness", action="store_true", help="also decide (I : π) = I")
    parser.add_argument("--special", action="store_true", help="facts about the ideal with π set to 0")
    args = parser.parse_args()

    names, symbols, gens, _ = read_ideal(args.ideal.read())
    if args.mode == "basis":
        sys.stdout.write(format_basis(reduced_basis(gens, symbols), symbols, names))
        return

    facts = {"vars": len(names), "gens": len(gens)}
    if args.flatness:
        facts["flat"] = flat_over_pi(gens, symbols)
    if args.special:
        if names and names[0] == "π":
            gens = [g for g in (g.subs(symbols[0], 0) for g in gens) if g != 0]
            symbols, names = symbols[1:], names[1:]
        basis = reduced_basis(gens, symbols)
        facts["special_dim"] = krull_dimension(basis, symbols)
        facts["special_squarefree"] = squarefree_leading_terms(basis, symbols)
    json.dump(facts, sys.stdout, sort_keys=True)
    sys.stdout.write("\n")


if __name__ == "__main__":
    main()
