"""Finite automata with epsilon moves.

An :class:`Automaton` is an immutable epsilon-NFA whose states and symbols
are plain strings. Transitions are stored as a set of ``(source, symbol,
target)`` triples, with :data:`EPSILON` standing for the empty move. A
missing entry means "no transition": a run that gets stranded rejects.

States may optionally be split into *stable* and *perceiving* states. The
split has no effect on the language; it is kept for structural comparisons
and for the enzyme perception map.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, NamedTuple, Optional, Sequence

from .errors import AlphabetError, DomainError, PerceptionUndefinedError, PreconditionError

EPSILON = "eps"

STABLE = "stable"
PERCEIVING = "perceiving"
UNSPECIFIED = "unspecified"
KINDS = (STABLE, PERCEIVING, UNSPECIFIED)


@dataclass(frozen=True)
class Automaton:
    states: frozenset
    alphabet: frozenset
    edges: frozenset
    initial: str
    finals: frozenset
    stable: frozenset = field(default_factory=frozenset)
    perceiving: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        for name in ("states", "alphabet", "finals", "stable", "perceiving"):
            object.__setattr__(self, name, frozenset(getattr(self, name)))
        object.__setattr__(self, "edges", frozenset(tuple(e) for e in self.edges))

        for q in self.states:
            if not isinstance(q, str) or not q:
                raise DomainError(f"state names must be non-empty strings, got {q!r}")
        for x in self.alphabet:
            if not isinstance(x, str) or not x:
                raise DomainError(f"symbols must be non-empty strings, got {x!r}")
        if EPSILON in self.alphabet:
            raise AlphabetError(f"{EPSILON!r} is reserved for the empty move")
        if self.initial not in self.states:
            raise DomainError(f"initial state {self.initial!r} is not a state")
        if not self.finals <= self.states:
            raise DomainError(f"final states {sorted(self.finals - self.states)} are not states")
        for e in self.edges:
            if len(e) != 3:
                raise DomainError(f"transition {e!r} is not a (source, symbol, target) triple")
            src, x, dst = e
            if src not in self.states or dst not in self.states:
                raise DomainError(f"transition {e!r} leaves the state set")
            if x != EPSILON and x not in self.alphabet:
                raise AlphabetError(f"transition {e!r} uses a symbol outside the alphabet")
        if self.stable or self.perceiving:
            if self.stable & self.perceiving:
                raise DomainError("a state cannot be both stable and perceiving")
            if self.stable | self.perceiving != self.states:
                raise DomainError("the stable/perceiving partition must cover every state")

    @classmethod
    def from_table(
        cls,
        table: Mapping,
        initial: str,
        finals: Iterable[str],
        alphabet: Optional[Iterable[str]] = None,
        states: Iterable[str] = (),
        stable: Iterable[str] = (),
        perceiving: Iterable[str] = (),
    ) -> Automaton:
        """Build from ``{(state, symbol): target-or-targets}``.

        A single string target is shorthand for a one-element set. When no
        alphabet is given it is inferred from the table.
        """
        edges = set()
        all_states = set(states) | {initial} | set(finals)
        inferred = set()
        for (src, x), targets in table.items():
            if isinstance(targets, str):
                targets = (targets,)
            all_states.add(src)
            if x != EPSILON:
                inferred.add(x)
            for dst in targets:
                all_states.add(dst)
                edges.add((src, x, dst))
        return cls(
            states=all_states,
            alphabet=inferred if alphabet is None else alphabet,
            edges=edges,
            initial=initial,
            finals=finals,
            stable=stable,
            perceiving=perceiving,
        )

    @property
    def has_partition(self) -> bool:
        return bool(self.stable or self.perceiving)

    def kind(self, q: str) -> str:
        if q in self.stable:
            return STABLE
        if q in self.perceiving:
            return PERCEIVING
        return UNSPECIFIED

    @cached_property
    def delta(self) -> dict:
        """``(state, symbol) -> frozenset of targets`` for the non-empty entries."""
        table = {}
        for src, x, dst in self.edges:
            table.setdefault((src, x), set()).add(dst)
        return {k: frozenset(v) for k, v in table.items()}

    def targets(self, q: str, x: str) -> frozenset:
        return self.delta.get((q, x), frozenset())

    @cached_property
    def is_deterministic(self) -> bool:
        return all(x != EPSILON and len(t) <= 1 for (_, x), t in self.delta.items())

    @cached_property
    def _closures(self) -> dict:
        closures = {}
        for q in self.states:
            seen = {q}
            stack = [q]
            while stack:
                for nxt in self.targets(stack.pop(), EPSILON):
                    if nxt not in seen:
                        seen.add(nxt)
                        stack.append(nxt)
            closures[q] = frozenset(seen)
        return closures

    def __repr__(self):
        return (
            f"Automaton(states={sorted(self.states)}, alphabet={sorted(self.alphabet)}, "
            f"initial={self.initial!r}, finals={sorted(self.finals)}, {len(self.edges)} transitions)"
        )


class RunResult(NamedTuple):
    accepted: bool
    reachable: frozenset


def epsilon_closure(a: Automaton, states: Iterable[str]) -> frozenset:
    states = frozenset(states)
    unknown = states - a.states
    if unknown:
        raise DomainError(f"unknown states {sorted(unknown)}")
    closures = a._closures
    out = set()
    for q in states:
        out |= closures[q]
    return frozenset(out)


def step(a: Automaton, states: frozenset, x: str) -> frozenset:
    """Epsilon-closed successor set of an already closed state set."""
    closures = a._closures
    out = set()
    for q in states:
        for nxt in a.delta.get((q, x), ()):
            out |= closures[nxt]
    return frozenset(out)


def run(a: Automaton, word: Iterable[str]) -> RunResult:
    """Feed `word` to `a` from its initial state.

    `word` is any iterable of symbols; a plain string is read one
    character at a time, which suits single-letter alphabets.
    """
    current = a._closures[a.initial]
    for x in word:
        if x not in a.alphabet:
            raise AlphabetError(f"symbol {x!r} is not in the alphabet {sorted(a.alphabet)}")
        current = step(a, current, x)
    return RunResult(bool(current & a.finals), current)


def accepts(a: Automaton, word: Iterable[str]) -> bool:
    return run(a, word).accepted


def subset_name(states: Iterable[str]) -> str:
    return "{" + ",".join(sorted(states)) + "}"


def determinize(a: Automaton) -> Automaton:
    """Subset construction over the reachable, non-empty subsets."""
    symbols = sorted(a.alphabet)
    start = a._closures[a.initial]
    names = {start: subset_name(start)}
    queue = deque([start])
    edges = set()
    while queue:
        current = queue.popleft()
        for x in symbols:
            nxt = step(a, current, x)
            if not nxt:
                continue
            if nxt not in names:
                names[nxt] = subset_name(nxt)
                queue.append(nxt)
            edges.add((names[current], x, names[nxt]))
    return Automaton(
        states=names.values(),
        alphabet=a.alphabet,
        edges=edges,
        initial=names[start],
        finals={names[s] for s in names if s & a.finals},
    )


_DEAD = object()


def minimize(d: Automaton) -> Automaton:
    """Minimal DFA for a deterministic automaton.

    The reachable part is completed with a dead state, refined into
    equivalence classes, and the dead class is stripped again (unless it
    holds the initial state, i.e. the language is empty). States of the
    result are named ``q0, q1, ...`` in breadth-first order over the sorted
    alphabet, so language-equivalent inputs yield identical outputs.
    """
    if not d.is_deterministic:
        raise PreconditionError("minimize needs a deterministic automaton; determinize first")
    symbols = sorted(d.alphabet)

    reachable = {d.initial}
    queue = deque([d.initial])
    while queue:
        q = queue.popleft()
        for x in symbols:
            for nxt in d.targets(q, x):
                if nxt not in reachable:
                    reachable.add(nxt)
                    queue.append(nxt)

    def succ(q, x):
        if q is _DEAD:
            return _DEAD
        t = d.targets(q, x)
        return next(iter(t)) if t else _DEAD

    universe = list(reachable) + [_DEAD]
    block = {q: int(q is not _DEAD and q in d.finals) for q in universe}
    n_blocks = len(set(block.values()))
    while True:
        signatures = {q: (block[q],) + tuple(block[succ(q, x)] for x in symbols) for q in universe}
        renumber = {}
        new_block = {}
        for q in universe:
            new_block[q] = renumber.setdefault(signatures[q], len(renumber))
        block = new_block
        if len(renumber) == n_blocks:
            break
        n_blocks = len(renumber)

    dead_block = block[_DEAD]
    rep = {}
    for q in universe:
        rep.setdefault(block[q], q)

    start = block[d.initial]
    names = {start: "q0"}
    order = deque([start])
    edges = set()
    while order:
        blk = order.popleft()
        for x in symbols:
            nxt = block[succ(rep[blk], x)]
            if nxt == dead_block:
                continue
            if nxt not in names:
                names[nxt] = f"q{len(names)}"
                order.append(nxt)
            edges.add((names[blk], x, names[nxt]))
    finals = {names[b] for b in names if rep[b] is not _DEAD and rep[b] in d.finals}
    return Automaton(states=names.values(), alphabet=d.alphabet, edges=edges, initial="q0", finals=finals)


def canonical_dfa(a: Automaton) -> Automaton:
    return minimize(determinize(a))


def _check_same_alphabet(a: Automaton, b: Automaton) -> None:
    if a.alphabet != b.alphabet:
        raise AlphabetError(
            f"alphabets differ: {sorted(a.alphabet)} vs {sorted(b.alphabet)}; relabel one side first"
        )


def language_equivalent(a: Automaton, b: Automaton) -> bool:
    _check_same_alphabet(a, b)
    return canonical_dfa(a) == canonical_dfa(b)


def distinguishing_words(a: Automaton, b: Automaton) -> tuple:
    """Shortlex-least words in ``L(a) - L(b)`` and ``L(b) - L(a)``; None where the difference is empty."""
    _check_same_alphabet(a, b)
    symbols = sorted(a.alphabet)
    start = (a._closures[a.initial], b._closures[b.initial])
    seen = {start}
    queue = deque([(start, ())])
    only_a = only_b = None
    while queue and (only_a is None or only_b is None):
        (sa, sb), word = queue.popleft()
        in_a, in_b = bool(sa & a.finals), bool(sb & b.finals)
        if in_a and not in_b and only_a is None:
            only_a = word
        if in_b and not in_a and only_b is None:
            only_b = word
        for x in symbols:
            nxt = (step(a, sa, x), step(b, sb, x))
            if nxt not in seen:
                seen.add(nxt)
                queue.append((nxt, word + (x,)))
    return only_a, only_b


@dataclass(frozen=True)
class Relabeling:
    """Renaming of symbols and states; names absent from a map are kept."""

    symbol_map: Mapping = field(default_factory=dict)
    state_map: Mapping = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "symbol_map", dict(self.symbol_map))
        object.__setattr__(self, "state_map", dict(self.state_map))
        for name, m in (("symbol", self.symbol_map), ("state", self.state_map)):
            if len(set(m.values())) != len(m):
                raise DomainError(f"{name} map is not injective")
        if EPSILON in self.symbol_map or EPSILON in self.symbol_map.values():
            raise DomainError(f"{EPSILON!r} cannot be relabeled")

    def symbol(self, x: str) -> str:
        if x == EPSILON:
            return x
        return self.symbol_map.get(x, x)

    def state(self, q: str) -> str:
        return self.state_map.get(q, q)

    def word(self, word: Iterable[str]) -> tuple:
        return tuple(self.symbol(x) for x in word)

    def inverse(self) -> Relabeling:
        return Relabeling(
            {v: k for k, v in self.symbol_map.items()},
            {v: k for k, v in self.state_map.items()},
        )

    def __hash__(self):
        return hash((frozenset(self.symbol_map.items()), frozenset(self.state_map.items())))


def relabel(a: Automaton, m: Relabeling) -> Automaton:
    symbols = {x: m.symbol(x) for x in a.alphabet}
    states = {q: m.state(q) for q in a.states}
    if len(set(symbols.values())) != len(symbols):
        raise DomainError("relabeling merges symbols of the automaton")
    if len(set(states.values())) != len(states):
        raise DomainError("relabeling merges states of the automaton")
    return Automaton(
        states=states.values(),
        alphabet=symbols.values(),
        edges={(states[s], m.symbol(x), states[t]) for s, x, t in a.edges},
        initial=states[a.initial],
        finals={states[q] for q in a.finals},
        stable={states[q] for q in a.stable},
        perceiving={states[q] for q in a.perceiving},
    )


def enzyme_perception(a: Automaton, q: str, x: str) -> str:
    """The perceiving state reached from stable state `q` on cognate `x`.

    Raises :class:`PerceptionUndefinedError` when `q` has no (or no unique)
    perceiving successor on `x`, e.g. a saturated complex.
    """
    if not a.has_partition:
        raise PreconditionError("automaton has no stable/perceiving partition")
    if q not in a.states:
        raise DomainError(f"unknown state {q!r}")
    if x not in a.alphabet:
        raise AlphabetError(f"symbol {x!r} is not in the alphabet")
    if q not in a.stable:
        raise DomainError(f"state {q!r} is not stable")
    candidates = a.targets(q, x) & a.perceiving
    if len(candidates) != 1:
        raise PerceptionUndefinedError(f"no unique perceiving successor of {q!r} on {x!r}")
    return next(iter(candidates))


def perception_map(a: Automaton, enabler: Iterable[str]) -> dict:
    """All defined values of the perception map over stable states x `enabler`."""
    out = {}
    for q in sorted(a.stable):
        for x in sorted(enabler):
            try:
                out[(q, x)] = enzyme_perception(a, q, x)
            except PerceptionUndefinedError:
                pass
    return out


def fallback_violations(a: Automaton) -> list:
    """Perception pairs whose perceiving state cannot fall back to its stable origin."""
    return [
        (q, x, p)
        for (q, x), p in perception_map(a, a.alphabet).items()
        if q not in a.targets(p, EPSILON)
    ]


def all_words(symbols: Sequence[str], max_length: int):
    """Every word of length at most `max_length`, in shortlex order."""
    frontier = [()]
    yield ()
    for _ in range(max_length):
        frontier = [w + (x,) for w in frontier for x in symbols]
        yield from frontier
