"""Command-line front end: ``uhfk <verb> [options]``.

Exit status 0 on success, 2 on malformed input, 1 on domain errors. With
``--format json`` a single object ``{verb, inputs_echo, result, checks}`` is
written to stdout.
"""
import argparse
import json
import sys
import warnings

from . import chartab, cyclo, ktheory, repring
from .abgrp import AbGroup, parse_abgroup
from .config import chartab_budget
from .errors import DomainError, ParseError
from .grammar import format_cycles
from .group import build_group
from .gset import build_gset
from .supernat import parse_supernatural

VERBS = (
    "char-table",
    "perm-char",
    "certificate",
    "absorption",
    "bernoulli-k",
    "flip-F",
    "flip-E",
    "rokhlin",
    "kunneth",
    "localize",
    "abgrp-eval",
)


class Report:
    def __init__(self, verb, inputs):
        self.verb = verb
        self.inputs = {k: v for k, v in inputs.items() if v is not None}
        self.result = {}
        self.lines = []
        self.checks = []
        self.warnings = []

    def check(self, name, passed):
        self.checks.append({"name": name, "passed": bool(passed)})

    def as_json(self):
        out = {"verb": self.verb, "inputs_echo": self.inputs, "result": self.result, "checks": self.checks}
        if self.warnings:
            out["warnings"] = self.warnings
        return out

    def as_text(self):
        lines = list(self.lines)
        for w in self.warnings:
            lines.append(f"warning: {w}")
        for c in self.checks:
            lines.append(f"check {c['name']}: {'passed' if c['passed'] else 'FAILED'}")
        return "\n".join(lines)


def _class_labels(G):
    return [format_cycles(c.representative) for c in G.classes]


def _group_gset(args):
    G = build_group(args.group)
    Z = build_gset(G, args.gset) if args.gset is not None else None
    return G, Z


def _need(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise ParseError(f"--{name.replace('_', '-')} is required for {args.verb}", f"--{name}")


def _roundtrip(rep, label, group):
    rep.check(f"{label} display re-parses", parse_abgroup(str(group)) == group)


def _kpair(rep, P):
    rep.result.update({"K0": str(P.k0), "K1": str(P.k1)})
    rep.lines += [f"K0 = {P.k0}", f"K1 = {P.k1}"]
    _roundtrip(rep, "K0", P.k0)
    _roundtrip(rep, "K1", P.k1)


def format_value(vec):
    """Root-of-unity sum as text, ``z`` standing for ``exp(2 pi i / e)``."""
    red = cyclo.reduce(vec)
    if not any(red[1:]):
        return str(red[0])
    terms = []
    for j, m in enumerate(vec):
        if m:
            base = "1" if j == 0 else ("z" if j == 1 else f"z^{j}")
            terms.append(base if m == 1 and j else f"{m}*{base}" if j else str(m))
    return " + ".join(terms)


# -- verbs -------------------------------------------------------------------


def cmd_char_table(args, rep):
    _need(args, "group")
    G = build_group(args.group)
    T = chartab.character_table(G)
    labels = _class_labels(G)
    rep.result = {
        "order": G.order,
        "exponent": T.exponent,
        "prime": T.prime,
        "classes": labels,
        "class_sizes": list(T.class_sizes),
        "degrees": list(T.degrees),
        "values": [[list(v) for v in row] for row in T.irreducibles],
    }
    rep.lines.append(f"|G| = {G.order}, exponent {T.exponent}, z = exp(2 pi i/{T.exponent}), prime {T.prime}")
    rep.lines.append("classes: " + "  ".join(f"{l}[{s}]" for l, s in zip(labels, T.class_sizes)))
    for i, row in enumerate(T.irreducibles):
        rep.lines.append(f"chi_{i} (deg {T.degrees[i]}): " + " | ".join(format_value(v) for v in row))
    for name, ok in chartab.verify_table(T):
        rep.check(name, ok)


def _oracle_check(args, rep, G, Z, chi):
    if args.oracle:
        brute = repring.perm_character_bruteforce(G, Z, args.k)
        rep.result["oracle"] = list(brute.values)
        rep.check("brute-force enumeration agrees", brute == chi)


def cmd_perm_char(args, rep):
    _need(args, "group", "gset", "k")
    G, Z = _group_gset(args)
    chi = repring.perm_character(G, Z, args.k)
    labels = _class_labels(G)
    rep.result = {"classes": labels, "values": list(chi.values)}
    rep.lines += [f"chi({l}) = {v}" for l, v in zip(labels, chi.values)]
    _oracle_check(args, rep, G, Z, chi)


def cmd_certificate(args, rep):
    _need(args, "group", "gset", "k")
    G, Z = _group_gset(args)
    chi = repring.perm_character(G, Z, args.k)
    a = repring.alpha_certificate(G, Z, args.k)
    b = repring.beta_certificate(G, Z, args.k)
    rep.result = {
        "chi": list(chi.values),
        "r": a.r,
        "p": str(a.p),
        "q": str(b.q),
        "l": b.l,
        "degenerate": a.degenerate,
    }
    rep.lines += [f"chi = {list(chi.values)}", f"r = {a.r}", f"p = {a.p}", f"q = {b.q}", f"l = {b.l}"]
    rep.check("chi^r == k * p(chi)", a.holds(chi))
    rep.check("chi * q(chi) == k^l", b.holds(chi))
    _oracle_check(args, rep, G, Z, chi)


def cmd_absorption(args, rep):
    _need(args, "group", "gset", "p")
    G, Z = _group_gset(args)
    cert = chartab.absorption_certificate(G, Z, args.p)
    chi = repring.perm_character(G, Z, args.p)
    mults = list(cert.w_alpha.multiplicities)
    rep.result = {"r": cert.r, "multiplicities": mults, "degrees": list(cert.w_alpha.table.degrees), "dim": cert.dimension}
    rep.lines += [f"r = {cert.r}", f"W multiplicities = {mults}", f"dim W = {cert.dimension}"]
    for name, ok in chartab.absorption_checks(cert, chi):
        rep.check(name, ok)


def cmd_bernoulli_k(args, rep):
    _need(args, "group", "n")
    G, Z = _group_gset(args)
    P = ktheory.bernoulli_k(G, parse_supernatural(args.n), Z if Z is not None else "infinite")
    rep.result["classes"] = len(G.classes)
    _kpair(rep, P)
    rep.check("K1 vanishes", P.k1.is_zero())
    rep.check("K0 rank equals class count", P.k0.rank() == len(G.classes))
    if G.order <= chartab_budget():
        rep.check("class count equals irreducible count", len(chartab.character_table(G).degrees) == len(G.classes))


def cmd_flip_F(args, rep):
    _need(args, "m", "n")
    P = ktheory.flip_F(parse_supernatural(args.m), parse_supernatural(args.n))
    _kpair(rep, P)


def cmd_flip_E(args, rep):
    _need(args, "m", "n")
    n, m = parse_supernatural(args.n), parse_supernatural(args.m)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        P = ktheory.flip_E(n, m)
    rep.warnings += [str(w.message) for w in caught]
    _kpair(rep, P)
    rep.check("K1 agrees with the Kunneth route", ktheory.flip_E_from_components(n, m) == P)


def cmd_rokhlin(args, rep):
    _need(args, "group", "n")
    G = build_group(args.group)
    r = ktheory.rokhlin_excluded(G, parse_supernatural(args.n))
    rep.result = {"excluded": r.excluded, "lhs": str(r.lhs), "rhs": str(r.rhs), "classes": r.classes}
    rep.lines += [
        f"Rokhlin K0 = {r.lhs}",
        f"Bernoulli K0 = {r.rhs}",
        f"Rokhlin property excluded: {'yes' if r.excluded else 'no'}",
    ]
    rep.check("excluded iff G nontrivial", r.excluded == (G.order > 1))


def cmd_kunneth(args, rep):
    _need(args, "a0", "a1", "b0", "b1")
    s = args.saturate
    A = ktheory.KPair(parse_abgroup(args.a0, s), parse_abgroup(args.a1, s))
    B = ktheory.KPair(parse_abgroup(args.b0, s), parse_abgroup(args.b1, s))
    P = ktheory.kunneth(A, B)
    _kpair(rep, P)
    rep.check("symmetric in the factors", ktheory.kunneth(B, A) == P)


def cmd_localize(args, rep):
    _need(args, "k0", "k1", "n")
    s = args.saturate
    n = parse_supernatural(args.n)
    if s:
        from .supernat import saturate

        n = saturate(n)
    P = ktheory.KPair(parse_abgroup(args.k0, s), parse_abgroup(args.k1, s))
    L = ktheory.localize_k(P, n)
    _kpair(rep, L)
    rep.check("idempotent", ktheory.localize_k(L, n) == L)


def cmd_abgrp_eval(args, rep):
    if not args.expr:
        raise ParseError("abgrp-eval needs an expression", "<end>")
    A = parse_abgroup(" ".join(args.expr), args.saturate)
    rep.result = {"value": str(A), "rank": A.rank(), "torsion": A.is_torsion()}
    rep.lines.append(str(A))
    _roundtrip(rep, "value", A)


COMMANDS = {
    "char-table": cmd_char_table,
    "perm-char": cmd_perm_char,
    "certificate": cmd_certificate,
    "absorption": cmd_absorption,
    "bernoulli-k": cmd_bernoulli_k,
    "flip-F": cmd_flip_F,
    "flip-E": cmd_flip_E,
    "rokhlin": cmd_rokhlin,
    "kunneth": cmd_kunneth,
    "localize": cmd_localize,
    "abgrp-eval": cmd_abgrp_eval,
}


def build_parser():
    ap = argparse.ArgumentParser(prog="uhfk", description="Permutation characters, character tables and K-theory formulas.")
    ap.add_argument("verb", choices=VERBS)
    ap.add_argument("expr", nargs="*", help="expression for abgrp-eval")
    ap.add_argument("--group", help='e.g. "symmetric 3", "product (cyclic 4) (cyclic 2)", "perm 4 {(012),(01)(23)}"')
    ap.add_argument("--gset", help='e.g. "regular", "trivial 2", "coset {(01)}", "union regular (trivial 1)"')
    ap.add_argument("--k", type=int)
    ap.add_argument("--p", type=int)
    ap.add_argument("--n", help='supernatural number, e.g. "6^inf"')
    ap.add_argument("--m", help="supernatural number")
    ap.add_argument("--oracle", action="store_true", help="also run the brute-force enumeration")
    for name in ("a0", "a1", "b0", "b1", "k0", "k1"):
        ap.add_argument(f"--{name}", help="abelian group, e.g. \"Z + Q[2^inf]/Z\"")
    ap.add_argument("--saturate", action="store_true", help="saturate finite-type supernatural inputs")
    ap.add_argument("--format", choices=("text", "json"), default="text")
    return ap


def _fail(args, kind, exc, status, out, err):
    token = getattr(exc, "token", None)
    if args.format == "json":
        obj = {"verb": args.verb, "error": {"type": kind, "message": str(exc)}}
        if token is not None:
            obj["error"]["token"] = token
        print(json.dumps(obj, sort_keys=True), file=out)
    msg = f"error: {kind}: {exc}"
    if token is not None and token not in str(exc):
        msg += f" (token {token!r})"
    print(msg, file=err)
    return status


def main(argv=None, out=None, err=None):
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    args = build_parser().parse_args(argv)
    if args.expr and args.verb != "abgrp-eval":
        return _fail(args, "ParseError", ParseError(f"unexpected argument {args.expr[0]!r}", args.expr[0]), 2, out, err)
    inputs = {k: v for k, v in vars(args).items() if k not in ("verb", "format") and v not in (None, False, [])}
    if "expr" in inputs:
        inputs["expr"] = " ".join(inputs["expr"])
    rep = Report(args.verb, inputs)
    try:
        COMMANDS[args.verb](args, rep)
    except ParseError as exc:
        return _fail(args, "ParseError", exc, 2, out, err)
    except DomainError as exc:
        return _fail(args, type(exc).__name__, exc, 1, out, err)
    except ValueError as exc:
        return _fail(args, "InvalidArgument", exc, 2, out, err)
    if args.format == "json":
        print(json.dumps(rep.as_json(), sort_keys=True), file=out)
    else:
        print(rep.as_text(), file=out)
    return 0 if all(c["passed"] for c in rep.checks) else 1


if __name__ == "__main__":
    sys.exit(main())
