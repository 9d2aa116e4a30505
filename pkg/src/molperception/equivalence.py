"""Structural comparisons between automata.

Two decidable relations stand in for "behaves like the perception-based
reaction automaton":

* relabeling isomorphism: a bijective renaming of states and symbols that
  maps one transition graph exactly onto the other, keeping the initial
  state, final states, stable/perceiving kinds and epsilon moves;
* simulation embedding: an injective state map plus a symbol bijection
  under which every transition of one automaton is a transition of the
  other, with initial mapped to initial and finals into finals.

Both are found by exhaustive backtracking, so a ``None`` answer is a proof
that no witness exists.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Mapping, Optional

from .automata import EPSILON, Automaton, Relabeling
from .catalog import perception
from .errors import DomainError

ISOMORPHISM = "isomorphism"
EMBEDDING = "embedding"
MODES = (ISOMORPHISM, EMBEDDING)


@dataclass(frozen=True)
class Embedding:
    state_map: Mapping = field(default_factory=dict)
    symbol_map: Mapping = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "state_map", dict(self.state_map))
        object.__setattr__(self, "symbol_map", dict(self.symbol_map))

    def symbol(self, x: str) -> str:
        return x if x == EPSILON else self.symbol_map[x]

    def compose(self, other: Embedding) -> Embedding:
        """``other`` after ``self``."""
        return Embedding(
            {q: other.state_map[m] for q, m in self.state_map.items()},
            {x: other.symbol_map[y] for x, y in self.symbol_map.items()},
        )

    def __hash__(self):
        return hash((frozenset(self.state_map.items()), frozenset(self.symbol_map.items())))


def is_embedding(a: Automaton, b: Automaton, e: Embedding) -> bool:
    m, sigma = e.state_map, e.symbol_map
    if set(m) != set(a.states) or not set(m.values()) <= b.states or len(set(m.values())) != len(m):
        return False
    if set(sigma) != set(a.alphabet) or set(sigma.values()) != set(b.alphabet):
        return False
    if len(set(sigma.values())) != len(sigma):
        return False
    if m[a.initial] != b.initial or not {m[q] for q in a.finals} <= b.finals:
        return False
    return all((m[s], e.symbol(x), m[t]) in b.edges for s, x, t in a.edges)


class _Matcher:
    def __init__(self, a: Automaton, b: Automaton, exact: bool, fixed: Optional[Mapping] = None):
        self.a, self.b, self.exact = a, b, exact
        self.fixed = dict(fixed or {})
        self.out_a = {q: [] for q in a.states}
        self.in_a = {q: [] for q in a.states}
        for s, x, t in a.edges:
            self.out_a[s].append((x, t))
            self.in_a[t].append((s, x))
        self.deg_a = {q: (Counter(x for x, _ in self.out_a[q]), Counter(x for _, x in self.in_a[q])) for q in a.states}
        out_b = {q: Counter() for q in b.states}
        in_b = {q: Counter() for q in b.states}
        for s, x, t in b.edges:
            out_b[s][x] += 1
            in_b[t][x] += 1
        self.deg_b = {q: (out_b[q], in_b[q]) for q in b.states}
        self.order = self._visit_order()

    def _visit_order(self) -> list:
        a = self.a
        nbrs = {q: set() for q in a.states}
        for s, _, t in a.edges:
            nbrs[s].add(t)
            nbrs[t].add(s)
        order = []
        seen = set()
        for root in [a.initial] + sorted(a.states):
            if root in seen:
                continue
            seen.add(root)
            queue = deque([root])
            while queue:
                q = queue.popleft()
                order.append(q)
                for n in sorted(nbrs[q]):
                    if n not in seen:
                        seen.add(n)
                        queue.append(n)
        return order

    def symbol_maps(self):
        a_syms = sorted(self.a.alphabet)
        b_syms = sorted(self.b.alphabet)
        if len(a_syms) != len(b_syms):
            return
        count_a = Counter(x for _, x, _ in self.a.edges)
        count_b = Counter(x for _, x, _ in self.b.edges)
        if self.exact and count_a[EPSILON] != count_b[EPSILON]:
            return
        if not self.exact and count_a[EPSILON] > count_b[EPSILON]:
            return
        sigma = {}
        used = set()

        def extend(i):
            if i == len(a_syms):
                yield dict(sigma)
                return
            x = a_syms[i]
            candidates = [self.fixed[x]] if x in self.fixed else sorted(b_syms, key=lambda y: (y != x, y))
            for y in candidates:
                if y not in self.b.alphabet:
                    continue
                if y in used:
                    continue
                if self.exact and count_a[x] != count_b[y]:
                    continue
                if not self.exact and count_a[x] > count_b[y]:
                    continue
                sigma[x] = y
                used.add(y)
                yield from extend(i + 1)
                used.discard(y)
                del sigma[x]

        yield from extend(0)

    def _fits(self, q, c, sigma, m) -> bool:
        a, b = self.a, self.b
        if self.exact:
            if (q in a.finals) != (c in b.finals) or a.kind(q) != b.kind(c):
                return False
        elif q in a.finals and c not in b.finals:
            return False
        for da, db in zip(self.deg_a[q], self.deg_b[c]):
            for x, n in da.items():
                have = db.get(x if x == EPSILON else sigma[x], 0)
                if have < n or (self.exact and have != n):
                    return False
        for x, t in self.out_a[q]:
            y = x if x == EPSILON else sigma[x]
            target = c if t == q else m.get(t)
            if target is not None and (c, y, target) not in b.edges:
                return False
        for s, x in self.in_a[q]:
            y = x if x == EPSILON else sigma[x]
            source = m.get(s)
            if source is not None and s != q and (source, y, c) not in b.edges:
                return False
        return True

    def state_map(self, sigma) -> Optional[dict]:
        a, b = self.a, self.b
        m = {}
        used = set()

        def extend(i):
            if i == len(self.order):
                return True
            q = self.order[i]
            if q == a.initial:
                candidates = [b.initial]
            else:
                candidates = sorted(b.states - used - {b.initial}, key=lambda c: (c != q, c))
            for c in candidates:
                if c in used or not self._fits(q, c, sigma, m):
                    continue
                m[q] = c
                used.add(c)
                if extend(i + 1):
                    return True
                used.discard(c)
                del m[q]
            return False

        return dict(m) if extend(0) else None

    def search(self):
        a, b = self.a, self.b
        if self.exact:
            if (
                len(a.states) != len(b.states)
                or len(a.edges) != len(b.edges)
                or len(a.finals) != len(b.finals)
                or a.has_partition != b.has_partition
            ):
                return None
        elif len(a.states) > len(b.states) or len(a.edges) > len(b.edges):
            return None
        for sigma in self.symbol_maps():
            m = self.state_map(sigma)
            if m is not None:
                return sigma, m
        return None


def find_relabeling_isomorphism(
    a: Automaton, b: Automaton, symbol_map: Optional[Mapping] = None
) -> Optional[Relabeling]:
    """Exact structural match of `a` onto `b`; `symbol_map` pins part of the symbol bijection."""
    found = _Matcher(a, b, exact=True, fixed=symbol_map).search()
    if found is None:
        return None
    sigma, m = found
    return Relabeling(symbol_map=sigma, state_map=m)


def simulation_embedding(a: Automaton, b: Automaton, symbol_map: Optional[Mapping] = None) -> Optional[Embedding]:
    found = _Matcher(a, b, exact=False, fixed=symbol_map).search()
    if found is None:
        return None
    sigma, m = found
    return Embedding(state_map=m, symbol_map=sigma)


def is_perception_based_reaction(a: Automaton, mode: str = EMBEDDING) -> bool:
    if mode == ISOMORPHISM:
        return find_relabeling_isomorphism(a, perception()) is not None
    if mode == EMBEDDING:
        return simulation_embedding(a, perception()) is not None
    raise DomainError(f"unknown mode {mode!r}; expected one of {', '.join(MODES)}")
