#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Normalise, compare and evaluate short-circuit and conditional terms, check
axiom sets and search for counter-models.

Just install sclogic:
    pip install sclogic
"""

import argparse
import logging
import multiprocessing
import sys

from .congruences import (
    Equation,
    congruence,
    dump_axiom_set,
    get_axiom_set,
    axiom_set_names,
    load_axiom_set,
    normal_form,
    verdict,
    verify_axiom_set,
)
from .modelfinder import (
    INCONCLUSIVE,
    INDEPENDENT,
    SearchConfig,
    find_model,
    independence_report,
    record_sizes,
)
from .normalforms import AtomOrder
from .sclogic_error import SearchExhausted
from .semantics import truth_table
from .syntax import dump, parse_term, to_text
from .terms import Atom, dual, three_valued
from .translate import cond_to_seq, desugar_full, seq_to_cond
from .version import __version__

logger = logging.getLogger(__name__)

HOLDS, REFUTED, ERROR, EXHAUSTED = 0, 1, 2, 3

_TRANSLATIONS = {"seq2cond": seq_to_cond, "cond2seq": cond_to_seq, "desugar": desugar_full}


def _load_set(name, parser):
    if name.startswith("@"):
        return load_axiom_set(name[1:], parser)
    return get_axiom_set(name)


def _congruence(args, *terms):
    three = args.three or any(three_valued(t) for t in terms)
    return congruence(args.congruence, three)


def _config(args):
    return SearchConfig(
        max_size=args.max_size,
        budget=args.budget,
        deadline=args.timeout,
        symmetry_breaking=not args.no_symmetry,
    )


def _parse(args):
    print(to_text(parse_term(args.expr, args.sig)))
    return HOLDS


def _nf(args):
    t = parse_term(args.expr, args.sig)
    form = normal_form(t, _congruence(args, t), AtomOrder.parse(args.order))
    if args.dot:
        dump(form, args.dot)
    print(to_text(cond_to_seq(form) if args.as_seq else form))
    return HOLDS


def _equiv(args):
    s = parse_term(args.lhs, args.sig)
    t = parse_term(args.rhs, args.sig)
    if _congruence(args, s, t).equiv(s, t, AtomOrder.parse(args.order)):
        print("equivalent")
        return HOLDS
    print("not equivalent")
    return REFUTED


def _check_eq(args):
    e = Equation.parse(args.equation, "equation", args.sig)
    v = verdict(e, _congruence(args, e.lhs, e.rhs), AtomOrder.parse(args.order))
    print(v)
    return HOLDS if v.holds() else REFUTED


def _verify_axioms(args):
    axioms = _load_set(args.set, args.parser)
    c = _congruence(args, *[side for e in axioms for side in (e.lhs, e.rhs)])
    report = verify_axiom_set(axioms, c, AtomOrder.parse(args.order))
    print(report)
    return HOLDS if report.holds() else REFUTED


def _truth_table(args):
    t = parse_term(args.expr, args.sig)
    atoms = None
    if args.atoms:
        atoms = [Atom(name.strip()) for name in args.atoms.split(",") if name.strip()]
    sys.stdout.write(truth_table(t, atoms, two_valued=args.two).to_tsv())
    return HOLDS


def _translate(args):
    sig = {"seq2cond": "seq", "cond2seq": "cond"}.get(args.dir, "seq")
    print(to_text(_TRANSLATIONS[args.dir](parse_term(args.expr, sig))))
    return HOLDS


def _dual(args):
    print(to_text(dual(parse_term(args.expr, "cond"))))
    return HOLDS


def _find_model(args):
    axioms = _load_set(args.axioms, args.parser) if args.axioms else None
    if args.without:
        if axioms is None:
            raise ValueError("--without needs --axioms")
        goal = axioms[args.without]
        axioms = axioms.without(args.without)
    if args.goal:
        goal = Equation.parse(args.goal, "goal")
    elif not args.without:
        raise ValueError("Give the goal with --goal, or name an axiom with --without")
    found = find_model(axioms or (), goal, _config(args))
    if found is None:
        print("no counter-model up to size %d" % args.max_size)
        return HOLDS
    print(found)
    return REFUTED


def _independence(args):
    axioms = _load_set(args.set, args.parser)
    report = independence_report(axioms, _config(args), args.cpu_num)
    print(report)
    if args.record:
        record_sizes(report, args.record)
    if any(r.status == INCONCLUSIVE for r in report.results):
        return EXHAUSTED
    return HOLDS if all(r.status == INDEPENDENT for r in report.results) else REFUTED


def _list_axioms(args):
    if args.set:
        sys.stdout.write(dump_axiom_set(_load_set(args.set, args.parser)))
    else:
        print("\n".join(axiom_set_names()))
    return HOLDS


def _int_or_auto(num_cpu):
    if num_cpu == "auto":
        return multiprocessing.cpu_count()
    return int(num_cpu)


def _add_congruence(p):
    p.add_argument(
        "-c",
        "--congruence",
        default="cl",
        choices=["free", "mem", "cl"],
        help="Valuation congruence. Default is cl.",
    )
    p.add_argument("--three", action="store_true", help="Allow U. Implied when U occurs in the input.")
    p.add_argument("--order", metavar="ATOMS", help="Atom order such as a,b,c. Default is lexicographic.")


def _add_sig(p):
    p.add_argument("--sig", default="auto", choices=["auto", "seq", "cond"], help="Signature of the input.")


def _add_search(p):
    p.add_argument("--max-size", type=int, default=4, help="Largest domain size tried. Default is 4.")
    p.add_argument("--timeout", type=float, default=60.0, help="Seconds per goal. Default is 60.")
    p.add_argument("--budget", type=int, default=2_000_000, help="Cell assignments per size. Default is 2000000.")
    p.add_argument("--no-symmetry", action="store_true", help="Disable least-number symmetry breaking.")


def _build_parser():
    parser = argparse.ArgumentParser(prog="sclogic", description="Short-circuit and conditional logic toolkit.")
    parser.add_argument(
        "-p",
        "--parser",
        default="pyyaml",
        help='YAML library to load axiom files. Choices are "ruamel" or "pyyaml" (default).',
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="show verbose information")
    parser.add_argument("-V", "--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    p = sub.add_parser("parse", help="Print a term in canonical form.")
    _add_sig(p)
    p.add_argument("expr")
    p.set_defaults(func=_parse)

    p = sub.add_parser("nf", help="Normal form of a closed term.")
    _add_congruence(p)
    _add_sig(p)
    p.add_argument("--dot", metavar="PATH", help="Also write the normal form as a DOT graph.")
    p.add_argument("--as-seq", action="store_true", help="Print the normal form in the sequential signature.")
    p.add_argument("expr")
    p.set_defaults(func=_nf)

    p = sub.add_parser("equiv", help="Decide whether two closed terms are congruent.")
    _add_congruence(p)
    _add_sig(p)
    p.add_argument("lhs")
    p.add_argument("rhs")
    p.set_defaults(func=_equiv)

    p = sub.add_parser("check-eq", help='Decide an open equation "LHS = RHS" with variables ?x.')
    _add_congruence(p)
    _add_sig(p)
    p.add_argument("equation")
    p.set_defaults(func=_check_eq)

    p = sub.add_parser("verify-axioms", help="Check every axiom of a set.")
    _add_congruence(p)
    p.add_argument("--set", required=True, metavar="NAME|@FILE")
    p.set_defaults(func=_verify_axioms)

    p = sub.add_parser("truth-table", help="Tabulate a closed term as TSV.")
    _add_sig(p)
    p.add_argument("--two", action="store_true", help="Only T and F.")
    p.add_argument("--atoms", help="Atoms to tabulate, such as a,b. Default is the alphabet of the term.")
    p.add_argument("expr")
    p.set_defaults(func=_truth_table)

    p = sub.add_parser("translate", help="Map a term between the signatures.")
    p.add_argument("--dir", required=True, choices=sorted(_TRANSLATIONS))
    p.add_argument("expr")
    p.set_defaults(func=_translate)

    p = sub.add_parser("dual", help="Dual of a conditional term.")
    p.add_argument("expr")
    p.set_defaults(func=_dual)

    p = sub.add_parser("find-model", help="Search an algebra of the axioms that refutes the goal.")
    p.add_argument("--axioms", metavar="NAME|@FILE")
    p.add_argument("--without", metavar="AXIOM", help="Leave this axiom out and use it as the goal.")
    p.add_argument("--goal", metavar='"LHS = RHS"')
    _add_search(p)
    p.set_defaults(func=_find_model)

    p = sub.add_parser("independence", help="Search a counter-model for each axiom of a set.")
    p.add_argument("--set", required=True, metavar="NAME|@FILE")
    p.add_argument(
        "-n",
        "--cpu-num",
        default=1,
        type=_int_or_auto,
        help="Number of child processes to spawn. Default is 1. 'auto' to use CPU count.",
    )
    p.add_argument("--record", metavar="PATH", help="Store the counter-model sizes in this YAML file.")
    _add_search(p)
    p.set_defaults(func=_independence)

    p = sub.add_parser("list-axioms", help="List the registered sets, or print one in file format.")
    p.add_argument("--set", metavar="NAME|@FILE")
    p.set_defaults(func=_list_axioms)
    return parser


def _router(argv=None):
    args = _build_parser().parse_args(argv)
    if args.verbose:
        logging.basicConfig(level=logging.DEBUG, stream=sys.stderr)
    logger.debug("running %s", args.command)
    try:
        return args.func(args)
    except SearchExhausted as e:
        print("Search exhausted!\n%s" % e, file=sys.stderr)
        return EXHAUSTED
    except (SyntaxError, NameError, TypeError, ValueError) as e:
        print("Error!\n%s" % e, file=sys.stderr)
        return ERROR


def main(argv=None):
    sys.exit(_router(argv))


if __name__ == "__main__":
    main()
