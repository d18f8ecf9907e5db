"""Command-line interface: computation subcommands and verification suites.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
All numeric output is exact rational text; there is no floating point.
"""

from __future__ import annotations

import argparse
import json
import sys

from .grothendieck import dual_groth, klr_coeff, stable_groth_vars
from .partitions import Partition, Permutation
from .peterson import DSpec, d_det, phi_context, tau_sigma
from .polynomials import Poly
from .quantum import (
    g_tilde,
    groth_poly,
    k_conjugate,
    lambda_map,
    quantum_groth,
)
from .scalars import Rational
from .suites import SUITE_NAMES, run_suite


class ExprError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


def _tokenize(text: str):
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in "+-*^()":
            tokens.append((ch, ch, i))
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("int", int(text[i:j]), i))
            i = j
            continue
        if ch == "/":
            tokens.append(("/", "/", i))
            i += 1
            continue
        if ch.isalpha():
            j = i + 1
            while j < len(text) and text[j].isdigit():
                j += 1
            name = text[i:j]
            if len(name) < 2 or name[0] not in "zxQ":
                raise ExprError(f"unknown name {name!r}", i)
            tokens.append(("name", name, i))
            i = j
            continue
        raise ExprError(f"unexpected character {ch!r}", i)
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    """Grammar: expr := term (('+'|'-') term)*; term := factor ('*' factor)*;
    factor := ('-')* atom ('^' int)?; atom := name | int ('/' int)? | '(' expr ')'."""

    def __init__(self, text: str, variables):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.vars = variables

    def peek(self):
        return self.tokens[self.pos]

    def next(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind):
        tok = self.next()
        if tok[0] != kind:
            raise ExprError(f"expected {kind!r}, found {tok[1]!r}", tok[2])
        return tok

    def parse(self) -> Poly:
        value = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ExprError(f"trailing input {tok[1]!r}", tok[2])
        return value

    def expr(self) -> Poly:
        value = self.term()
        while self.peek()[0] in "+-":
            op = self.next()[0]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> Poly:
        value = self.factor()
        while self.peek()[0] == "*":
            self.next()
            value = value * self.factor()
        return value

    def factor(self) -> Poly:
        sign = 1
        while self.peek()[0] == "-":
            self.next()
            sign = -sign
        value = self.atom()
        if self.peek()[0] == "^":
            self.next()
            tok = self.expect("int")
            value = value ** tok[1]
        return value * sign if sign < 0 else value

    def atom(self) -> Poly:
        tok = self.next()
        if tok[0] == "int":
            num = tok[1]
            if self.peek()[0] == "/":
                self.next()
                den_tok = self.expect("int")
                if den_tok[1] == 0:
                    raise ExprError("zero denominator", den_tok[2])
                return Poly.const(self.vars, Rational(num, den_tok[1]))
            return Poly.const(self.vars, num)
        if tok[0] == "name":
            if tok[1] not in self.vars:
                raise ExprError(f"variable {tok[1]!r} out of range", tok[2])
            return Poly.variable(self.vars, tok[1])
        if tok[0] == "(":
            value = self.expr()
            self.expect(")")
            return value
        raise ExprError(f"unexpected token {tok[1]!r}", tok[2])


def parse_phi_expr(text: str, n: int) -> Poly:
    variables = (
        tuple(f"z{i}" for i in range(1, n + 1))
        + tuple(f"x{i}" for i in range(1, n + 1))
        + tuple(f"Q{i}" for i in range(1, n))
    )
    return _Parser(text, variables).parse()


def _emit(args, payload, text: str):
    body = text if getattr(args, "text", False) else json.dumps(payload, indent=2)
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(body + "\n")
    else:
        print(body)


def _add_io_flags(sub):
    sub.add_argument("--out", help="write output to this path instead of stdout")
    group = sub.add_mutually_exclusive_group()
    group.add_argument("--json", dest="text", action="store_false", default=False)
    group.add_argument("--text", dest="text", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kpet",
        description="Exact computations around the K-theoretic Peterson map.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("gdual", help="dual stable Grothendieck polynomial")
    p.add_argument("partition")
    _add_io_flags(p)

    p = subs.add_parser("klr", help="K-theoretic LR coefficient")
    p.add_argument("lam")
    p.add_argument("mu")
    p.add_argument("nu")
    _add_io_flags(p)

    p = subs.add_parser("gstable", help="stable Grothendieck polynomial in d variables")
    p.add_argument("partition")
    p.add_argument("d", type=int)
    _add_io_flags(p)

    p = subs.add_parser("tau", help="tau/sigma table")
    p.add_argument("--n", type=int, required=True)
    _add_io_flags(p)

    p = subs.add_parser("ddet", help="D-determinant value")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--theta", required=True, help="comma-separated integers")
    p.add_argument("--a", required=True, help="comma-separated non-negative integers")
    _add_io_flags(p)

    p = subs.add_parser("phi", help="apply the Peterson map to a polynomial")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--poly", required=True)
    _add_io_flags(p)

    p = subs.add_parser("groth", help="Grothendieck polynomial")
    p.add_argument("w")
    p.add_argument("--n", type=int, help="defaults to the length of w")
    _add_io_flags(p)

    p = subs.add_parser("qgroth", help="quantum Grothendieck polynomial")
    p.add_argument("w")
    p.add_argument("--n", type=int)
    _add_io_flags(p)

    p = subs.add_parser("gtilde", help="numerator of the Peterson image of GQ_w")
    p.add_argument("w")
    p.add_argument("--n", type=int)
    _add_io_flags(p)

    p = subs.add_parser("lambda-map", help="k-bounded partition of a permutation")
    p.add_argument("w")
    p.add_argument("--n", type=int)
    _add_io_flags(p)

    p = subs.add_parser("kconj", help="k-conjugate of a k-bounded partition")
    p.add_argument("partition")
    p.add_argument("--k", type=int, required=True)
    _add_io_flags(p)

    p = subs.add_parser("toda-roundtrip", help="randomized exact round-trip check")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    _add_io_flags(p)

    p = subs.add_parser("verify", help="run a named verification suite")
    p.add_argument("suite", choices=sorted(SUITE_NAMES))
    p.add_argument("--n", type=int)
    p.add_argument("--trials", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--jobs", type=int, default=1)
    _add_io_flags(p)

    return parser


def _perm(args) -> Permutation:
    w = Permutation.from_text(args.w)
    if args.n and args.n != w.n:
        raise SystemExit(f"--n {args.n} does not match the permutation length {w.n}")
    return w


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _dispatch(args)
    except ExprError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _dispatch(args) -> int:
    cmd = args.command
    if cmd == "gdual":
        value = dual_groth(Partition.from_text(args.partition))
        _emit(args, value.to_json(), value.to_str())
    elif cmd == "klr":
        value = klr_coeff(
            Partition.from_text(args.lam),
            Partition.from_text(args.mu),
            Partition.from_text(args.nu),
        )
        _emit(args, value, str(value))
    elif cmd == "gstable":
        value = stable_groth_vars(Partition.from_text(args.partition), args.d)
        _emit(args, value.to_json(), value.to_str())
    elif cmd == "tau":
        table = tau_sigma(args.n)
        payload = {
            "n": args.n,
            "tau": [t.to_json() for t in table.tau],
            "sigma": [s.to_json() for s in table.sigma],
        }
        text = "\n".join(
            [f"tau{i} = {t.to_str()}" for i, t in enumerate(table.tau)]
            + [f"sigma{i} = {s.to_str()}" for i, s in enumerate(table.sigma)]
        )
        _emit(args, payload, text)
    elif cmd == "ddet":
        theta = tuple(int(v) for v in args.theta.split(","))
        avec = tuple(int(v) for v in args.a.split(","))
        value = d_det(DSpec(theta, avec, args.n))
        _emit(args, value.to_json(), value.to_str())
    elif cmd == "phi":
        poly = parse_phi_expr(args.poly, args.n)
        frac = phi_context(args.n).apply(poly)
        _emit(args, frac.to_json(), f"({frac.num.to_str()}) / ({frac.den.to_str()})")
    elif cmd == "groth":
        value = groth_poly(_perm(args))
        _emit(args, value.to_json(), value.to_str())
    elif cmd == "qgroth":
        value = quantum_groth(_perm(args))
        _emit(args, value.to_json(), value.to_str())
    elif cmd == "gtilde":
        value = g_tilde(_perm(args))
        _emit(args, value.to_json(), value.to_str())
    elif cmd == "lambda-map":
        value = lambda_map(_perm(args)).partition
        _emit(args, value.to_text(), value.to_text())
    elif cmd == "kconj":
        value = k_conjugate(Partition.from_text(args.partition), args.k)
        _emit(args, value.to_text(), value.to_text())
    elif cmd == "toda-roundtrip":
        report = run_suite("toda-roundtrip", n=args.n, trials=args.trials, seed=args.seed)
        payload = {
            "trials": len(report.cases),
            "failures": report.failures,
            "seed": report.seed,
        }
        _emit(args, payload, json.dumps(payload))
        return report.exit_code
    elif cmd == "verify":
        report = run_suite(
            args.suite, n=args.n, trials=args.trials, seed=args.seed, jobs=args.jobs
        )
        _emit(args, report.to_json(), report.summary())
        return report.exit_code
    return 0


if __name__ == "__main__":
    sys.exit(main())
