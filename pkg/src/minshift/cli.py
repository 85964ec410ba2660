"""Command line interface.

Every subcommand reads one source (substitution rules file, continued
fraction quotients, or an explicit prefix file), builds the factor table
it needs, runs one operation, and emits a TSV or JSON report carrying
enough provenance (source hash, depths, budgets, version) to reproduce
the run.  Exit codes: 0 success, 1 usage or parse problem, 2
verification failure, 3 computation budget exhausted.
"""

import argparse
import hashlib
import json
import sys

from . import __version__
from .blockcodes import (
    code_from_json_dict, enumerate_endomorphisms, verify_endomorphism,
)
from .branching import (
    asymptotic_upper_bound, aut_upper_bound, branch_census,
    certify_branch_periodic, certify_branch_suffix, left_special_tree,
    substitution_root_bound,
)
from .checks import run_checks
from .errors import (
    BudgetError, DomainError, RuleParseError, ValidationError,
)
from .language import (
    build_language, build_language_from_sequence, cassaigne_K, complexity,
    complexity_diff, special_words,
)
from .recurrence import cassaigne_s_bound, lr_aut_bound, return_words
from .sturmian import as_quotients, characteristic_word, sturmian_language
from .words import iterate, parse_rules


class _Parser(argparse.ArgumentParser):
    """argparse variant whose usage errors exit with code 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, "%s: error: %s\n" % (self.prog, message))


def _add_source(parser):
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--rules", metavar="FILE",
                       help="substitution rules file, one 'letter -> image' per line")
    group.add_argument("--cf", metavar="A1,A2,...",
                       help="continued fraction quotients of a Sturmian source")
    group.add_argument("--prefix-file", metavar="FILE",
                       help="explicit sequence prefix to cut factors from")


def _add_format(parser):
    parser.add_argument("--format", choices=("tsv", "json"), default="tsv")


class _Source:
    def __init__(self, args):
        if args.rules is not None:
            with open(args.rules) as fp:
                text = fp.read()
            self.kind = "substitution"
            self.theta = parse_rules(text)
            self.text = self.theta.rules_text()
        elif args.cf is not None:
            try:
                self.quotients = as_quotients(
                    part for part in args.cf.split(",") if part.strip())
            except ValueError:
                raise DomainError("could not parse quotients %r" % args.cf)
            self.kind = "sturmian"
            self.theta = None
            self.text = "cf:" + ",".join(str(a) for a in self.quotients)
        else:
            with open(args.prefix_file) as fp:
                self.prefix = fp.read().strip()
            self.kind = "sequence"
            self.theta = None
            self.text = self.prefix

    def table(self, n_max):
        if self.kind == "substitution":
            return build_language(self.theta, n_max)
        if self.kind == "sturmian":
            return sturmian_language(self.quotients, n_max)
        return build_language_from_sequence(self.prefix, n_max)

    def probe(self, length):
        if self.kind == "substitution":
            seed = self.theta.alphabet[0]
            k = 0
            while len(iterate(self.theta, seed, k)) < length:
                k += 1
            return iterate(self.theta, seed, k)
        if self.kind == "sturmian":
            return characteristic_word(self.quotients, length)
        return self.prefix

    def provenance(self, **parameters):
        return {
            "artifact": "minshift %s" % __version__,
            "source_kind": self.kind,
            "source_hash": hashlib.sha256(self.text.encode()).hexdigest(),
            "parameters": parameters,
        }


def _emit_json(doc):
    print(json.dumps(doc, indent=2, sort_keys=True))


def cmd_complexity(args):
    if args.depth < 1:
        raise DomainError("depth must be >= 1")
    source = _Source(args)
    table = source.table(args.depth + 1)
    rows = [(n, complexity(table, n), complexity_diff(table, n))
            for n in range(1, args.depth + 1)]
    probe = cassaigne_K(table, args.depth)
    if args.format == "json":
        _emit_json({
            "provenance": source.provenance(depth=args.depth),
            "rows": [{"n": n, "p": p, "s": s} for n, p, s in rows],
            "max_s": probe.l_hat,
            "cassaigne_K": {"L_hat": probe.l_hat, "K": probe.k,
                            "empirical": probe.empirical},
        })
    else:
        print("n\tp\ts")
        for n, p, s in rows:
            print("%d\t%d\t%d" % (n, p, s))
        print("# max_s\t%d" % probe.l_hat)
        print("# cassaigne_K\tL_hat=%d\tK=%d\tempirical=%s"
              % (probe.l_hat, probe.k, probe.empirical))
    return 0


def cmd_special(args):
    if args.length < 1:
        raise DomainError("length must be >= 1")
    source = _Source(args)
    table = source.table(args.length + 1)
    found = special_words(table, args.length, args.side)
    if args.format == "json":
        _emit_json({
            "provenance": source.provenance(length=args.length, side=args.side),
            "side": args.side,
            "words": [{"word": w, "extensions": sorted(ext)} for w, ext in found],
        })
    else:
        print("word\textensions")
        for w, ext in found:
            print("%s\t%s" % (w, "".join(sorted(ext))))
    return 0


def cmd_branch(args):
    if args.depth < 1:
        raise DomainError("depth must be >= 1")
    source = _Source(args)
    table = source.table(args.depth + 1)
    tree = left_special_tree(table, args.depth)
    certs = []
    if source.theta is not None and not args.no_certificates:
        certs = (certify_branch_periodic(source.theta, table, args.max_period)
                 + certify_branch_suffix(source.theta, table, args.max_period))
    census = branch_census(tree, tuple(certs))
    try:
        bound = aut_upper_bound(census)
        asym = asymptotic_upper_bound(census).to_json_dict()
    except DomainError:
        bound = None
        asym = None
    _emit_json({
        "provenance": source.provenance(depth=args.depth, max_period=args.max_period),
        "census": census.to_json_dict(),
        "certificates": [c.to_json_dict() for c in certs],
        "aut_bound": bound,
        "asymptotic_upper_bound": asym,
        "depth": args.depth,
    })
    return 0


def cmd_return_words(args):
    source = _Source(args)
    u = args.u
    table = source.table(min(64, 4 * len(u) + 4))
    probe = source.probe(args.probe_length)
    found = sorted(return_words(table, probe, u))
    if args.format == "json":
        _emit_json({
            "provenance": source.provenance(u=u, probe_length=len(probe)),
            "u": u,
            "return_words": found,
            "max_ratio": max(len(w) for w in found) / len(u) if found else None,
        })
    else:
        print("return_word\tlength")
        for w in found:
            print("%s\t%d" % (w, len(w)))
    return 0


def cmd_bounds(args):
    doc = {
        "artifact": "minshift %s" % __version__,
        "K": args.K,
        "s_bound": cassaigne_s_bound(args.K),
        "aut_bound": lr_aut_bound(args.K),
        "root_index_bound": lr_aut_bound(args.K),
    }
    if args.alphabet_size is not None:
        doc["root_power_bound"] = substitution_root_bound(args.alphabet_size)
    _emit_json(doc)
    return 0


def cmd_search_endo(args):
    if args.depth < 1:
        raise DomainError("depth must be >= 1")
    if args.radius < 0:
        raise DomainError("radius must be >= 0")
    source = _Source(args)
    table = source.table(args.depth + args.radius)
    reports = enumerate_endomorphisms(
        table, args.radius, args.depth, node_budget=args.node_budget)
    if args.emit_json:
        _emit_json({
            "provenance": source.provenance(
                radius=args.radius, depth=args.depth, node_budget=args.node_budget),
            "codes": [r.to_json_dict() for r in reports],
        })
    else:
        for i, r in enumerate(reports):
            kind = ("shift power %d" % r.shift_power_equivalent
                    if r.shift_power_equivalent is not None else "not a shift power")
            inv = "invertible" if r.invertible else "not invertible"
            print("code %d: %s; %s; verified to depth %d"
                  % (i, kind, inv, r.verified_depth))
        print("# %d code(s) at radius %d, depth %d"
              % (len(reports), args.radius, args.depth))
    return 0


def cmd_verify(args):
    if args.depth < 1:
        raise DomainError("depth must be >= 1")
    source = _Source(args)
    with open(args.code) as fp:
        doc = json.load(fp)
    window = int(doc.get("memory", 0)) + 1 + int(doc.get("anticipation", 0))
    table = source.table(args.depth + window - 1)
    code = code_from_json_dict(doc, table)
    report = verify_endomorphism(code, table, args.depth)
    _emit_json({
        "provenance": source.provenance(depth=args.depth, code_file=args.code),
        "report": report.to_json_dict(),
    })
    return 0 if report.ok else 2


def cmd_paper_check(args):
    results = run_checks(only=args.only)
    if args.emit_json:
        _emit_json({
            "artifact": "minshift %s" % __version__,
            "results": [{"name": r.name, "ok": r.ok, "detail": r.detail}
                        for r in results],
        })
    else:
        for r in results:
            print(r.line())
        failed = sum(1 for r in results if not r.ok)
        print("# %d check(s), %d failed" % (len(results), failed))
    return 0 if all(r.ok for r in results) else 2


def build_parser():
    parser = _Parser(prog="minshift",
                     description="factor languages, branch points, and "
                                 "sliding-block endomorphism search")
    parser.add_argument("--version", action="version",
                        version="minshift %s" % __version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("complexity", help="p(n) and s(n) up to a depth")
    _add_source(p)
    _add_format(p)
    p.add_argument("--depth", type=int, required=True)
    p.set_defaults(func=cmd_complexity)

    p = sub.add_parser("special", help="left- or right-special words of one length")
    _add_source(p)
    _add_format(p)
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--side", choices=("left", "right"), default="left")
    p.set_defaults(func=cmd_special)

    p = sub.add_parser("branch", help="left-special tree, certificates, census, bounds")
    _add_source(p)
    p.add_argument("--depth", type=int, default=30)
    p.add_argument("--max-period", type=int, default=2)
    p.add_argument("--no-certificates", action="store_true",
                   help="report the raw empirical chain census only")
    p.set_defaults(func=cmd_branch)

    p = sub.add_parser("return-words", help="return words to a factor")
    _add_source(p)
    _add_format(p)
    p.add_argument("--u", required=True, help="the factor to probe")
    p.add_argument("--probe-length", type=int, default=1 << 14)
    p.set_defaults(func=cmd_return_words)

    p = sub.add_parser("bounds", help="closed-form bounds from a recurrence constant")
    p.add_argument("--K", type=int, required=True)
    p.add_argument("--alphabet-size", type=int)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("search-endo", help="enumerate bounded-radius endomorphisms")
    _add_source(p)
    p.add_argument("--radius", type=int, required=True)
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--node-budget", type=int, default=None)
    p.add_argument("--emit-json", action="store_true")
    p.set_defaults(func=cmd_search_endo)

    p = sub.add_parser("verify", help="check a code JSON file against a source")
    _add_source(p)
    p.add_argument("--code", required=True, metavar="FILE")
    p.add_argument("--depth", type=int, required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("paper-check", help="run the built-in verification suite")
    p.add_argument("--only", metavar="GROUP",
                   help="run one check group (name or prefix)")
    p.add_argument("--emit-json", action="store_true")
    p.set_defaults(func=cmd_paper_check)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (RuleParseError, DomainError) as exc:
        print("minshift: error: %s" % exc, file=sys.stderr)
        return 1
    except ValidationError as exc:
        print("minshift: verification failure: %s" % exc, file=sys.stderr)
        return 2
    except BudgetError as exc:
        print("minshift: budget exhausted: %s" % exc, file=sys.stderr)
        return 3
    except OSError as exc:
        print("minshift: %s" % exc, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
