"""Command-line front-end.

Exit codes: 0 success or true predicate, 1 false predicate, 2 usage or
parse error, 3 domain error. Results go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import automata, catalog, equivalence, io, perception, reactions
from .dot import export_dot
from .errors import CatalogError, DomainError, FormatError

OK, FALSE, USAGE, DOMAIN = 0, 1, 2, 3


class _Usage(Exception):
    pass


class _Source(argparse.Action):
    """Collect --catalog/--file options, in order, into one list."""

    def __call__(self, parser, namespace, value, option_string=None):
        sources = list(getattr(namespace, self.dest) or [])
        sources.append((option_string.lstrip("-"), value))
        setattr(namespace, self.dest, sources)


def _add_sources(p: argparse.ArgumentParser, help_suffix: str = "") -> None:
    p.add_argument("--catalog", dest="sources", action=_Source, metavar="NAME",
                   help=f"built-in machine ({', '.join(catalog.names())}){help_suffix}")
    p.add_argument("--file", dest="sources", action=_Source, metavar="PATH",
                   help=f"automaton JSON file{help_suffix}")


def _load_automaton(kind: str, value: str) -> automata.Automaton:
    if kind == "catalog":
        try:
            return catalog.catalog(value)
        except CatalogError as exc:
            raise _Usage(str(exc)) from exc
    return io.automaton_from_dict(io.read_json(value))


def _automata(args, count: int) -> list:
    sources = args.sources or []
    if len(sources) != count:
        raise _Usage(f"expected {count} automaton source(s) via --catalog/--file, got {len(sources)}")
    return [_load_automaton(kind, value) for kind, value in sources]


def _word(text: str) -> list:
    return [x for x in text.split(",") if x] if text else []


def _fmt_word(word) -> str:
    return ",".join(word) if word else "(empty word)"


def _emit(obj, fmt: str = "json") -> None:
    if fmt == "dot":
        sys.stdout.write(export_dot(obj))
    else:
        print(io.dumps(obj))


# -- automaton -------------------------------------------------------------

def cmd_automaton_run(args) -> int:
    (a,) = _automata(args, 1)
    res = automata.run(a, _word(args.word))
    if args.format == "json":
        print(json.dumps({"accepted": res.accepted, "reachable": sorted(res.reachable)}))
    else:
        print("accepted" if res.accepted else "rejected")
        print("reachable:", " ".join(sorted(res.reachable)) or "(none)")
    return OK if res.accepted else FALSE


def cmd_automaton_determinize(args) -> int:
    (a,) = _automata(args, 1)
    _emit(automata.determinize(a), args.format)
    return OK


def cmd_automaton_minimize(args) -> int:
    (a,) = _automata(args, 1)
    if not a.is_deterministic:
        a = automata.determinize(a)
    _emit(automata.minimize(a), args.format)
    return OK


def cmd_automaton_equiv(args) -> int:
    a, b = _automata(args, 2)
    if automata.language_equivalent(a, b):
        print("equivalent")
        return OK
    only_a, only_b = automata.distinguishing_words(a, b)
    print("not equivalent")
    if only_a is not None:
        print("witness accepted only by first:", _fmt_word(only_a))
    if only_b is not None:
        print("witness accepted only by second:", _fmt_word(only_b))
    return FALSE


def cmd_automaton_embed(args) -> int:
    a, b = _automata(args, 2)
    if args.mode == equivalence.ISOMORPHISM:
        found = equivalence.find_relabeling_isomorphism(a, b)
    else:
        found = equivalence.simulation_embedding(a, b)
    if found is None:
        print(f"no {args.mode}")
        return FALSE
    print(json.dumps({"states": found.state_map, "symbols": found.symbol_map}, indent=2, sort_keys=True))
    return OK


def cmd_automaton_check(args) -> int:
    (a,) = _automata(args, 1)
    member = equivalence.is_perception_based_reaction(a, args.mode)
    print(f"perception-based reaction ({args.mode}): {'yes' if member else 'no'}")
    return OK if member else FALSE


# -- reaction systems -----------------------------------------------------

def _system(path: str) -> reactions.ReactionSystem:
    return io.system_from_dict(io.read_json(path))


def _graph(path: str):
    return io.graph_from_dict(io.read_json(path))


def cmd_rs_enabled(args) -> int:
    system = _system(args.system)
    t = _graph(args.state)
    reactions.check_state(t, system.background)
    chosen = [system.reaction(args.reaction)] if args.reaction else list(system.reactions)
    status = {b.name: reactions.enabled(b, t, system.background) for b in chosen}
    for name, on in status.items():
        print(f"{name}: {'enabled' if on else 'disabled'}")
    return OK if any(status.values()) else FALSE


def cmd_rs_step(args) -> int:
    system = _system(args.system)
    _emit(reactions.result_set(system, _graph(args.state)), args.format)
    return OK


def cmd_rs_run(args) -> int:
    system = _system(args.system)
    contexts = None
    if args.contexts:
        doc = io.read_json(args.contexts)
        if not isinstance(doc, list):
            raise FormatError("contexts file must hold a JSON list of graphs")
        contexts = [io.graph_from_dict(c) for c in doc]
    states = reactions.run(system, _graph(args.state), args.steps, contexts)
    print(io.dumps([io.graph_to_dict(s) for s in states]))
    return OK


# -- perception -----------------------------------------------------------

def cmd_perception_selector(args) -> int:
    if bool(args.graph) == bool(args.system):
        raise _Usage("give exactly one of --graph or --system")
    g = _graph(args.graph) if args.graph else _system(args.system).background
    _emit(perception.perception_selector(g, _word(args.enabler)))
    return OK


def cmd_perception_enabled(args) -> int:
    system = _system(args.system)
    t = _graph(args.state)
    reactions.check_state(t, system.background)
    selector = perception.perception_selector(system.background, _word(args.enabler))
    strict = not args.relaxed
    chosen = [system.reaction(args.reaction)] if args.reaction else list(system.reactions)
    status = {b.name: perception.perception_enabled(b, t, selector, strict) for b in chosen}
    if args.format == "json":
        resp = perception.resp_set(system, t, _word(args.enabler), strict)
        print(io.dumps({"reactions": status, "result": io.graph_to_dict(resp)}))
    else:
        for name, on in status.items():
            print(f"{name}: {'perception-enabled' if on else 'disabled'}")
    return OK if any(status.values()) else FALSE


def _environment(args):
    (a,) = _automata(args, 1)
    env = io.environment_from_dict(io.read_json(args.environment))
    return a, env


def cmd_perception_inhibited(args) -> int:
    a, env = _environment(args)
    inhibited = perception.is_inhibited(a, env, _graph(args.state))
    print("inhibited" if inhibited else "not inhibited")
    return OK if inhibited else FALSE


def cmd_perception_compile(args) -> int:
    a, env = _environment(args)
    _emit(perception.compile_environment(a, env))
    return OK


# -- catalog / export -----------------------------------------------------

def cmd_catalog_list(args) -> int:
    for name in catalog.names():
        a = catalog.catalog(name)
        print(f"{name}\t{len(a.states)} states\t{len(a.edges)} transitions\talphabet {','.join(sorted(a.alphabet))}")
    return OK


def cmd_catalog_show(args) -> int:
    _emit(catalog.catalog(args.name), args.format)
    return OK


def cmd_export_dot(args) -> int:
    if args.graph:
        if args.sources:
            raise _Usage("give either an automaton source or --graph, not both")
        obj = _graph(args.graph)
    else:
        (obj,) = _automata(args, 1)
    sys.stdout.write(export_dot(obj))
    return OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="molperception",
        description="Perception-based reaction automata and graph-based reaction systems.",
    )
    groups = parser.add_subparsers(dest="group", required=True)

    def verb(group, name, func, help):
        p = group.add_parser(name, help=help)
        p.set_defaults(func=func)
        return p

    def fmt(p, choices=("json", "dot"), default="json"):
        p.add_argument("--format", choices=choices, default=default)

    aut = groups.add_parser("automaton", help="run and compare automata").add_subparsers(dest="verb", required=True)
    p = verb(aut, "run", cmd_automaton_run, "feed a word to an automaton")
    _add_sources(p)
    p.add_argument("--word", required=True, help="comma-separated symbols, e.g. s,p")
    fmt(p, ("text", "json"), "text")
    p = verb(aut, "determinize", cmd_automaton_determinize, "subset construction")
    _add_sources(p)
    fmt(p)
    p = verb(aut, "minimize", cmd_automaton_minimize, "minimal DFA (determinizes first if needed)")
    _add_sources(p)
    fmt(p)
    p = verb(aut, "equiv", cmd_automaton_equiv, "language equivalence with witness words")
    _add_sources(p, " (give two)")
    p = verb(aut, "embed", cmd_automaton_embed, "structural embedding or isomorphism of the first into the second")
    _add_sources(p, " (give two)")
    p.add_argument("--mode", choices=equivalence.MODES, default=equivalence.EMBEDDING)
    p = verb(aut, "check", cmd_automaton_check, "membership in the perception-based reaction class")
    _add_sources(p)
    p.add_argument("--mode", choices=equivalence.MODES, default=equivalence.EMBEDDING)

    rs = groups.add_parser("rs", help="graph-based reaction systems").add_subparsers(dest="verb", required=True)
    p = verb(rs, "enabled", cmd_rs_enabled, "which reactions a state enables")
    p.add_argument("--system", required=True)
    p.add_argument("--state", required=True)
    p.add_argument("--reaction")
    p = verb(rs, "step", cmd_rs_step, "apply the result function once")
    p.add_argument("--system", required=True)
    p.add_argument("--state", required=True)
    fmt(p)
    p = verb(rs, "run", cmd_rs_run, "iterate the result function")
    p.add_argument("--system", required=True)
    p.add_argument("--state", required=True)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--contexts", help="JSON list of context graphs, one per step")

    perc = groups.add_parser("perception", help="perception selectors and inhibition").add_subparsers(
        dest="verb", required=True
    )
    p = verb(perc, "selector", cmd_perception_selector, "perception selector of a graph")
    p.add_argument("--graph")
    p.add_argument("--system")
    p.add_argument("--enabler", required=True, help="comma-separated enabler symbols")
    p = verb(perc, "enabled", cmd_perception_enabled, "which reactions a state perception-enables")
    p.add_argument("--system", required=True)
    p.add_argument("--state", required=True)
    p.add_argument("--enabler", required=True)
    p.add_argument("--reaction")
    p.add_argument("--relaxed", action="store_true", help="do not require the products to be present")
    fmt(p, ("text", "json"), "text")
    p = verb(perc, "inhibited", cmd_perception_inhibited, "is the reaction inhibited by a configuration")
    _add_sources(p)
    p.add_argument("--environment", required=True)
    p.add_argument("--state", required=True)
    p = verb(perc, "compile", cmd_perception_compile, "compile an environment into a reaction system")
    _add_sources(p)
    p.add_argument("--environment", required=True)

    cat = groups.add_parser("catalog", help="built-in machines").add_subparsers(dest="verb", required=True)
    verb(cat, "list", cmd_catalog_list, "list built-in machines")
    p = verb(cat, "show", cmd_catalog_show, "print a built-in machine")
    p.add_argument("name", choices=catalog.names())
    fmt(p)

    exp = groups.add_parser("export", help="render objects").add_subparsers(dest="verb", required=True)
    p = verb(exp, "dot", cmd_export_dot, "Graphviz DOT of an automaton or graph")
    _add_sources(p)
    p.add_argument("--graph")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    try:
        return args.func(args)
    except _Usage as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return DOMAIN


if __name__ == "__main__":
    sys.exit(main())
