"""Command-line front end: ``centerfocus <command> ...``.

Ideals are passed as ``--ideal "g1; g2; ..."``; a ring is either a JSON file
or an inline JSON object ``{"vars": [...], "domain": "QQ"}`` and defaults to
the seven parameters of the cubic Riccati family.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from gmpy2 import mpq

from . import __version__
from . import fixtures as fx
from .darboux import (DarbouxCertificate, cofactor, verify_hamiltonian,
                      verify_integrating_factor)
from .domains import DEFAULT_PRIME, DomainError, PrimeField, make_domain
from .focus import MalformedSystem, PlanarSystem, focus_quantities
from .groebner import (Budget, BudgetExceeded, IdealBasis, elimination_ideal, groebner_basis,
                       ideal_dimension, ideal_equal, ideal_intersect, ideal_membership,
                       radical_membership)
from .modular import lift_poly, rational_reconstruct
from .orders import order_from_spec
from .pipelines import Config, ConfigError, verify_cyclicity, verify_theorem1
from .poly import ParseError, Ring, canonical_string
from .variety import jacobian, rank_at_point

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


class InputError(ValueError):
    pass


def _load_json(arg):
    text = arg if arg.lstrip().startswith("{") else Path(arg).read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"bad JSON in {arg!r}: {exc}") from None


def _ring(args):
    if args.ring is None:
        R = fx.param_ring()
    else:
        spec = _load_json(args.ring)
        if "vars" not in spec:
            raise InputError("ring needs a 'vars' list")
        R = Ring(spec["vars"], make_domain(spec.get("domain", "QQ")))
    return R


def _order(args, R):
    return order_from_spec(args.order, R.vars) if args.order else None


def _ideal(text, R, order=None):
    parts = [t.strip() for t in text.split(";") if t.strip()]
    if not parts:
        raise InputError("empty ideal")
    return IdealBasis([R(t) for t in parts], R, order)


def _budget(args):
    return Budget(max_pairs=args.budget_pairs, max_seconds=args.budget_seconds)


def _system(args):
    if args.system:
        spec = _load_json(args.system)
        missing = {"vars", "P", "Q"} - set(spec)
        if missing:
            raise InputError(f"system file lacks {sorted(missing)}")
        names = list(spec["vars"]) + list(spec.get("params", []))
        R = Ring(names, make_domain(spec.get("domain", "QQ")))
        x, y = spec["vars"][:2]
        return PlanarSystem(R, R(spec["P"]), R(spec["Q"]), x, y)
    if args.family == "riccati3":
        return fx.riccati3()
    raise InputError("give --system FILE or --family riccati3")


def _out(args, payload, lines):
    if args.json:
        text = json.dumps(payload, indent=2) + "\n"
        if args.json == "-":
            sys.stdout.write(text)
        else:
            Path(args.json).write_text(text)
    if args.json != "-":
        for line in lines:
            print(line)


def _strs(polys):
    return [canonical_string(p) for p in polys]


# ---------------------------------------------------------------------------
# commands


def cmd_focus(args):
    S = _system(args)
    if args.modular:
        S = S.with_domain(PrimeField(args.prime))
    res = focus_quantities(S, args.k)
    gs = [g.to_ring(S.param_ring) for g in res.quantities]
    _out(args, {"k": args.k, "quantities": _strs(gs)},
         [f"g{i} = {canonical_string(g)}" for i, g in enumerate(gs, 1)])
    return EXIT_OK


def cmd_gb(args):
    R = _ring(args)
    G = groebner_basis(_ideal(args.ideal, R, _order(args, R)), budget=_budget(args))
    _out(args, {"basis": _strs(G.basis)}, _strs(G.basis))
    return EXIT_OK


def _membership(args, fn):
    R = _ring(args)
    f = R(args.poly)
    I = _ideal(args.ideal, R, _order(args, R))
    ok = fn(f, I, _budget(args))
    _out(args, {"member": ok}, ["true" if ok else "false"])
    return EXIT_OK


def cmd_member(args):
    return _membership(args, ideal_membership)


def cmd_radmember(args):
    return _membership(args, radical_membership)


def cmd_eliminate(args):
    R = _ring(args)
    drop = [v.strip() for v in args.drop.split(",") if v.strip()]
    E = elimination_ideal(_ideal(args.ideal, R), drop, _budget(args))
    _out(args, {"eliminated": drop, "basis": _strs(E.gens)}, _strs(E.gens))
    return EXIT_OK


def cmd_intersect(args):
    R = _ring(args)
    if len(args.ideal) < 2:
        raise InputError("intersect needs at least two --ideal options")
    J = ideal_intersect(*[_ideal(t, R) for t in args.ideal], budget=_budget(args))
    _out(args, {"basis": _strs(J.gens)}, _strs(J.gens))
    return EXIT_OK


def cmd_equal(args):
    R = _ring(args)
    if len(args.ideal) != 2:
        raise InputError("equal needs exactly two --ideal options")
    ok = ideal_equal(_ideal(args.ideal[0], R), _ideal(args.ideal[1], R), _budget(args))
    _out(args, {"equal": ok}, ["true" if ok else "false"])
    return EXIT_OK


def cmd_dim(args):
    R = _ring(args)
    d = ideal_dimension(_ideal(args.ideal, R), _budget(args))
    _out(args, {"dimension": d}, [str(d)])
    return EXIT_OK


def cmd_darboux(args):
    S = _system(args)
    K = cofactor(S, S.ring(args.poly))
    if K is None:
        _out(args, {"darboux": False, "cofactor": None}, ["not a Darboux polynomial"])
        return EXIT_FAIL
    _out(args, {"darboux": True, "cofactor": canonical_string(K)}, [f"K = {canonical_string(K)}"])
    return EXIT_OK


def _factor(text, R):
    poly, sep, exp = text.rpartition(":")
    if not sep:
        raise InputError(f"factor {text!r} must look like 'poly:exponent'")
    try:
        s = mpq(exp.strip())
    except ValueError:
        raise InputError(f"bad exponent {exp!r}") from None
    return R(poly), s


def cmd_intfactor(args):
    S = _system(args)
    cert = DarbouxCertificate([_factor(t, S.ring) for t in args.factor])
    ok = verify_integrating_factor(S, cert)
    _out(args, {"integrating_factor": ok}, ["true" if ok else "false"])
    return EXIT_OK if ok else EXIT_FAIL


def cmd_hamiltonian(args):
    S = _system(args)
    ok = verify_hamiltonian(S, S.ring(args.poly))
    _out(args, {"hamiltonian": ok}, ["true" if ok else "false"])
    return EXIT_OK if ok else EXIT_FAIL


def _point(text, R):
    pt = {}
    for item in text.split(","):
        name, sep, val = item.partition("=")
        name = name.strip()
        if not sep or name not in R.index:
            raise InputError(f"bad point coordinate {item!r}")
        try:
            pt[name] = mpq(val.strip())
        except ValueError:
            raise InputError(f"bad rational {val!r}") from None
    return pt


def cmd_jacobian_rank(args):
    R = _ring(args)
    fs = [R(t) for t in args.poly]
    pt = _point(args.point, R)
    missing = [v for v in R.vars if v not in pt]
    if missing:
        raise InputError(f"point lacks coordinates {missing}")
    r = rank_at_point(jacobian(fs, R.vars), pt)
    _out(args, {"rank": r}, [str(r)])
    return EXIT_OK


def cmd_reconstruct(args):
    if not 0 <= args.residue < args.prime:
        raise InputError("residue must lie in [0, prime)")
    q = rational_reconstruct(args.residue, args.prime)
    text = None if q is None else (str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}")
    _out(args, {"residue": args.residue, "modulus": args.prime, "rational": text},
         [text if text is not None else "none"])
    return EXIT_OK if q is not None else EXIT_FAIL


def cmd_lift(args):
    names = fx.PARAMS if args.ring is None else _load_json(args.ring)["vars"]
    R = Ring(names, PrimeField(args.prime))
    lifted = [lift_poly(R(t)) for t in args.poly]
    strs = [None if q is None else canonical_string(q) for q in lifted]
    _out(args, {"lifted": strs}, [s if s is not None else "none" for s in strs])
    return EXIT_OK if all(s is not None for s in strs) else EXIT_FAIL


def _config(args):
    return Config(prime=args.prime, k=args.k, budget_pairs=args.budget_pairs,
                  budget_seconds=args.budget_seconds, stretch_seconds=args.stretch_seconds,
                  seed=args.seed, samples=args.samples, stretch_k=args.stretch_k,
                  reverse_field=args.reverse_field, timing=not args.no_timing).validate()


def _pipeline(args, fn):
    report = fn(_config(args))
    if args.json:
        text = report.to_json()
        if args.json == "-":
            sys.stdout.write(text)
        else:
            Path(args.json).write_text(text)
    if args.json != "-":
        for line in report.summary_lines():
            print(line)
    return report.exit_code


def cmd_verify_theorem1(args):
    return _pipeline(args, verify_theorem1)


def cmd_verify_cyclicity(args):
    return _pipeline(args, verify_cyclicity)


# ---------------------------------------------------------------------------


def _common(p):
    p.add_argument("--ring", help="ring JSON file or inline object {\"vars\": [...], \"domain\": ...}")
    p.add_argument("--order", help="lex | degrevlex | elim:v1,v2,...")
    p.add_argument("--prime", type=int, default=DEFAULT_PRIME)
    p.add_argument("--budget-pairs", type=int)
    p.add_argument("--budget-seconds", type=float)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", metavar="OUT", help="write a JSON result ('-' for stdout)")
    p.add_argument("--k", type=int, default=4, help="number of focus quantities")


def _system_opts(p):
    p.add_argument("--system", help="system JSON file {vars, params, P, Q}")
    p.add_argument("--family", choices=["riccati3"])


def build_parser():
    ap = argparse.ArgumentParser(prog="centerfocus", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        p = sub.add_parser(name, help=help_)
        _common(p)
        p.set_defaults(fn=fn)
        return p

    p = add("focus", cmd_focus, "focus quantities g_1..g_k")
    _system_opts(p)
    p.add_argument("--modular", action="store_true", help="compute over GF(prime)")
    add("gb", cmd_gb, "reduced Groebner basis").add_argument("--ideal", required=True)
    for name, fn in (("member", cmd_member), ("radmember", cmd_radmember)):
        p = add(name, fn, f"{'radical ' if name == 'radmember' else ''}ideal membership")
        p.add_argument("poly")
        p.add_argument("--ideal", required=True)
    p = add("eliminate", cmd_eliminate, "elimination ideal")
    p.add_argument("--ideal", required=True)
    p.add_argument("--drop", required=True, help="comma-separated variables to eliminate")
    add("intersect", cmd_intersect, "ideal intersection").add_argument("--ideal", action="append", required=True)
    add("equal", cmd_equal, "ideal equality").add_argument("--ideal", action="append", required=True)
    add("dim", cmd_dim, "Krull dimension").add_argument("--ideal", required=True)
    p = add("darboux", cmd_darboux, "cofactor of a Darboux polynomial")
    _system_opts(p)
    p.add_argument("poly")
    p = add("intfactor", cmd_intfactor, "verify a Darboux integrating factor")
    _system_opts(p)
    p.add_argument("--factor", action="append", required=True, help="'poly:exponent', repeatable")
    p = add("hamiltonian", cmd_hamiltonian, "verify a Hamiltonian")
    _system_opts(p)
    p.add_argument("poly")
    p = add("jacobian-rank", cmd_jacobian_rank, "rank of a Jacobian at a rational point")
    p.add_argument("--poly", action="append", required=True)
    p.add_argument("--point", required=True, help="v1=q1,v2=q2,...")
    add("reconstruct", cmd_reconstruct, "rational reconstruction").add_argument("residue", type=int)
    add("lift", cmd_lift, "lift polynomials over GF(prime) to Q").add_argument("poly", nargs="+")
    for name, fn in (("verify-theorem1", cmd_verify_theorem1), ("verify-cyclicity", cmd_verify_cyclicity)):
        p = add(name, fn, "verification pipeline")
        p.add_argument("--samples", type=int, default=5)
        p.add_argument("--stretch-k", type=int, default=0,
                       help="also test g_1..g_K modulo the prime (0 disables)")
        p.add_argument("--stretch-seconds", type=float, default=60.0,
                       help="time cap for stretch checks")
        p.add_argument("--reverse-field", choices=["modp", "q"], default="modp")
        p.add_argument("--no-timing", action="store_true", help="zero all timings for byte-identical reports")
    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except ParseError as exc:
        print(f"error: parse error: {exc}", file=sys.stderr)
    except (ConfigError, DomainError, InputError, MalformedSystem, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
