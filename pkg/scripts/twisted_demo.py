#!/usr/bin/env python3
"""Small worked examples in the twisted matrix ring over F_p(x, y).

Usage: python scripts/twisted_demo.py [--p 5] [--n 3]
"""
import argparse

from centress.constructions import TwistedConfig, TwistedElement, to_matrix
from centress.valuation import ce_witness, ideal_compare, invert, is_central, valuation


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--p", type=int, default=5)
    ap.add_argument("--n", type=int, default=3)
    args = ap.parse_args()
    cfg = TwistedConfig(args.p, args.n)
    x, y = TwistedElement.f(cfg, cfg.x), TwistedElement.f(cfg, cfg.y)
    print(f"ring: {cfg.describe()}, matrices of size {cfg.N}")
    print(f"f(x) f(y) = {x * y}")
    print(f"f(y) f(x) = {y * x}")
    a = TwistedElement.parse(cfg, "(x*y" + "; 1" * (cfg.n - 1) + ")")
    print(f"a = {a}, v(a) = {valuation(a)}, central: {is_central(a)}")
    b = invert(a)
    print(f"a^-1 = {b}")
    print(f"a a^-1 = {a * b}")
    c, d = ce_witness(a)
    print(f"central witness: c = {c}, a c = {d}")
    pi = TwistedElement.pi_power(cfg, 1)
    print(f"aA vs pi A: {ideal_compare(a, pi).relation.value}")
    print(f"matrix of pi^(n-1):\n  {to_matrix(TwistedElement.pi_power(cfg, cfg.n - 1))}")


if __name__ == "__main__":
    main()
