"""Regenerates include/biped/detail/variational_terms.hpp.

The delta-derivative solutions h(t), f(t) are quasi-polynomials; this script
expands them per (theta, omega) monomial into terms
    coef * t^p * exp(rate * t) * {1, cos, sin}(freq * t)
and differentiates them in t once, offline. Run with python3 (needs sympy).
"""
import sys
import sympy as sp

t, th, om = sp.symbols("t theta omega", real=True)
E = sp.exp
S, C = sp.sin, sp.cos

h = sp.Rational(1, 384) * E(-3*t) * (
    384*E(3*t) + (om - th)**3 - E(6*t)*(om + th)**3
    + E(2*t)*(-192 + 3*om**3*(3 + 4*t) + 3*om**2*(1 - 4*t)*th - 3*om*(7 + 4*t)*th**2 + (1 + 12*t)*th**3)
    + E(4*t)*(-192 + 3*om**3*(-3 + 4*t) - 3*om*(-7 + 4*t)*th**2 + (1 - 12*t)*th**3 + 3*om**2*(th + 4*t*th)))

f = sp.Rational(1, 7680) * E(-3*t) * (
    -1920*E(2*t) - 1920*E(4*t) - 56*om**3 + 60*E(2*t)*om**3 - 60*E(4*t)*om**3 + 56*E(6*t)*om**3
    + 120*E(2*t)*om**3*t + 120*E(4*t)*om**3*t + 168*om**2*th + 60*E(2*t)*om**2*th
    + 60*E(4*t)*om**2*th + 168*E(6*t)*om**2*th - 120*E(2*t)*om**2*t*th + 120*E(4*t)*om**2*t*th
    - 168*om*th**2 - 780*E(2*t)*om*th**2 + 780*E(4*t)*om*th**2 + 168*E(6*t)*om*th**2
    - 120*E(2*t)*om*t*th**2 - 120*E(4*t)*om*t*th**2 + 56*th**3 + 580*E(2*t)*th**3
    + 580*E(4*t)*th**3 + 56*E(6*t)*th**3 + 120*E(2*t)*t*th**3 - 120*E(4*t)*t*th**3
    + 3*E(t)*(-65*(om - 3*th)*(om - th)**2 + 65*E(4*t)*(om + th)**2*(om + 3*th)
              + E(2*t)*(1280 + 140*om**3*t - 921*om**2*th + 60*om*t*th**2 - 697*th**3))*C(t)
    + 12*E(2*t)*((-1 + E(2*t))*om**3 + 13*(1 + E(2*t))*om**2*th + 3*(-1 + E(2*t))*om*th**2
                 - 9*(1 + E(2*t))*th**3)*C(2*t)
    + 45*E(3*t)*om**2*th*C(3*t) - 135*E(3*t)*th**3*C(3*t)
    - 195*E(t)*om**3*S(t) - 1179*E(3*t)*om**3*S(t) - 195*E(5*t)*om**3*S(t)
    - 195*E(t)*om**2*th*S(t) + 195*E(5*t)*om**2*th*S(t) + 1260*E(3*t)*om**2*t*th*S(t)
    + 975*E(t)*om*th**2*S(t) + 3813*E(3*t)*om*th**2*S(t) + 975*E(5*t)*om*th**2*S(t)
    - 585*E(t)*th**3*S(t) + 585*E(5*t)*th**3*S(t) + 540*E(3*t)*t*th**3*S(t)
    - 24*E(2*t)*om**3*S(2*t) - 24*E(4*t)*om**3*S(2*t) - 48*E(2*t)*om**2*th*S(2*t)
    + 48*E(4*t)*om**2*th*S(2*t) + 288*E(2*t)*om*th**2*S(2*t) + 288*E(4*t)*om*th**2*S(2*t)
    - 216*E(2*t)*th**3*S(2*t) + 216*E(4*t)*th**3*S(2*t)
    - 5*E(3*t)*om**3*S(3*t) + 135*E(3*t)*om*th**2*S(3*t))

MONOMIALS = [(0, 0), (3, 0), (2, 1), (1, 2), (0, 3)]  # powers of (theta, omega)


def split_term(term):
    coef, p, rate, trig, freq = sp.Integer(1), 0, sp.Integer(0), "kOne", sp.Integer(0)
    for fac in sp.Mul.make_args(term):
        if fac.is_Number:
            coef *= fac
        elif fac == t:
            p += 1
        elif fac.is_Pow and fac.base == t:
            p += int(fac.exp)
        elif isinstance(fac, sp.exp):
            rate += sp.expand(fac.args[0] / t)
        elif fac.is_Pow and isinstance(fac.base, sp.exp):
            rate += sp.expand(fac.base.args[0] * fac.exp / t)
        elif isinstance(fac, (sp.cos, sp.sin)):
            assert trig == "kOne", term
            trig = "kCos" if isinstance(fac, sp.cos) else "kSin"
            freq = sp.expand(fac.args[0] / t)
        else:
            raise ValueError(f"unexpected factor {fac} in {term}")
    return coef, p, rate, trig, freq


def tables(expr):
    poly = sp.Poly(sp.expand(sp.powsimp(sp.expand(expr), combine="exp")), th, om)
    out = []
    for mono in MONOMIALS:
        c = poly.coeff_monomial(th**mono[0] * om**mono[1])
        c = sp.expand(sp.powsimp(sp.expand(c), combine="exp"))
        terms = [split_term(a) for a in sp.Add.make_args(c) if a != 0]
        # merge identical basis functions
        merged = {}
        for coef, p, rate, trig, freq in terms:
            key = (p, rate, trig, freq)
            merged[key] = merged.get(key, 0) + coef
        out.append([(v,) + k for k, v in merged.items() if v != 0])
    return out


def emit(name, tabs):
    lines = [f"inline const MonomialTable {name} = {{{{"]
    for mono, terms in zip(MONOMIALS, tabs):
        lines.append(f"    // theta^{mono[0]} omega^{mono[1]}")
        lines.append("    TermList{")
        for coef, p, rate, trig, freq in terms:
            lines.append(f"        {{{float(coef)!r}, {p}, {float(rate)!r}, Trig::{trig}, {float(freq)!r}}},")
        lines.append("    },")
    lines.append("}};")
    return "\n".join(lines)


def main():
    funcs = {
        "kH": h, "kHDot": sp.diff(h, t), "kHDdot": sp.diff(h, t, 2),
        "kF": f, "kFDot": sp.diff(f, t), "kFDdot": sp.diff(f, t, 2),
    }
    body = "\n\n".join(emit(k, tables(v)) for k, v in funcs.items())
    header = f"""// Generated by tools/codegen/variational_terms.py. Do not edit by hand.
#pragma once

#include "biped/detail/quasi_polynomial.hpp"

namespace biped::detail {{

{body}

}}  // namespace biped::detail
"""
    sys.stdout.write(header)


if __name__ == "__main__":
    main()
