"""Finite automata over arbitrary hashable symbols.

``Nfa`` is nondeterministic with ε-moves (symbol ``EPS``); ``Dfa`` is a
partial deterministic automaton.  States are consecutive ints.
"""

from __future__ import annotations

from collections import deque
from typing import Callable, Hashable, Iterable, Iterator

from .errors import ResourceLimit

EPS = None


class Nfa:
    def __init__(self):
        self.n = 0
        self.initial: set[int] = set()
        self.finals: set[int] = set()
        self.delta: list[dict] = []

    def add_state(self, initial=False, final=False) -> int:
        q = self.n
        self.n += 1
        self.delta.append({})
        if initial:
            self.initial.add(q)
        if final:
            self.finals.add(q)
        return q

    def add_edge(self, p: int, symbol, q: int) -> bool:
        targets = self.delta[p].setdefault(symbol, set())
        if q in targets:
            return False
        targets.add(q)
        return True

    def edges(self) -> Iterator[tuple[int, Hashable, int]]:
        for p in range(self.n):
            for a, qs in self.delta[p].items():
                for q in qs:
                    yield p, a, q

    @property
    def alphabet(self) -> set:
        return {a for d in self.delta for a in d if a is not EPS}

    def num_edges(self) -> int:
        return sum(len(qs) for d in self.delta for qs in d.values())

    def copy(self) -> "Nfa":
        m = Nfa()
        m.n = self.n
        m.initial = set(self.initial)
        m.finals = set(self.finals)
        m.delta = [{a: set(qs) for a, qs in d.items()} for d in self.delta]
        return m

    # -- ε handling ------------------------------------------------------

    def eps_closure(self, states: Iterable[int]) -> frozenset:
        seen = set(states)
        stack = list(seen)
        while stack:
            p = stack.pop()
            for q in self.delta[p].get(EPS, ()):
                if q not in seen:
                    seen.add(q)
                    stack.append(q)
        return frozenset(seen)

    def remove_epsilon(self) -> "Nfa":
        closures = [self.eps_closure([p]) for p in range(self.n)]
        m = Nfa()
        for p in range(self.n):
            m.add_state(initial=p in self.initial, final=bool(closures[p] & self.finals))
        for p in range(self.n):
            for r in closures[p]:
                for a, qs in self.delta[r].items():
                    if a is EPS:
                        continue
                    for q in qs:
                        m.add_edge(p, a, q)
        return m

    # -- structure -------------------------------------------------------

    def accessible(self) -> set[int]:
        seen = set(self.initial)
        stack = list(seen)
        while stack:
            p = stack.pop()
            for qs in self.delta[p].values():
                for q in qs:
                    if q not in seen:
                        seen.add(q)
                        stack.append(q)
        return seen

    def coaccessible(self) -> set[int]:
        back: list[set[int]] = [set() for _ in range(self.n)]
        for p, _, q in self.edges():
            back[q].add(p)
        seen = set(self.finals)
        stack = list(seen)
        while stack:
            q = stack.pop()
            for p in back[q]:
                if p not in seen:
                    seen.add(p)
                    stack.append(p)
        return seen

    def restrict(self, keep: Iterable[int]) -> "Nfa":
        keep = sorted(set(keep))
        index = {q: i for i, q in enumerate(keep)}
        m = Nfa()
        for q in keep:
            m.add_state(initial=q in self.initial, final=q in self.finals)
        for q in keep:
            for a, ts in self.delta[q].items():
                for t in ts:
                    if t in index:
                        m.add_edge(index[q], a, index[t])
        return m

    def trim(self) -> "Nfa":
        return self.restrict(self.accessible() & self.coaccessible())

    def is_trim(self) -> bool:
        useful = self.accessible() & self.coaccessible()
        return len(useful) == self.n

    def reverse(self, relabel: Callable = lambda a: a) -> "Nfa":
        m = Nfa()
        for p in range(self.n):
            m.add_state(initial=p in self.finals, final=p in self.initial)
        for p, a, q in self.edges():
            m.add_edge(q, a if a is EPS else relabel(a), p)
        return m

    def map_symbols(self, f: Callable) -> "Nfa":
        """Relabel every non-ε symbol by ``f``; ``f`` may return ``EPS``."""
        m = Nfa()
        for p in range(self.n):
            m.add_state(initial=p in self.initial, final=p in self.finals)
        for p, a, q in self.edges():
            m.add_edge(p, EPS if a is EPS else f(a), q)
        return m

    def has_epsilon(self) -> bool:
        return any(EPS in d for d in self.delta)

    # -- queries ---------------------------------------------------------

    def is_empty(self) -> bool:
        return not (self.accessible() & self.finals)

    def is_finite(self) -> bool:
        """Finiteness of the accepted language (ε-free automaton assumed)."""
        t = self.trim()
        return not _has_cycle(t.n, lambda p: (q for qs in t.delta[p].values() for q in qs))

    def step(self, states: Iterable[int], symbol) -> frozenset:
        out = set()
        for p in states:
            out |= self.delta[p].get(symbol, set())
        return self.eps_closure(out)

    def accepts(self, word: Iterable) -> bool:
        current = self.eps_closure(self.initial)
        for a in word:
            current = self.step(current, a)
            if not current:
                return False
        return bool(current & self.finals)

    def words(self, max_len: int, key: Callable | None = None, budget: int | None = None) -> list[tuple]:
        """Accepted words of length <= max_len, sorted by ``key`` (default shortlex)."""
        found = set()
        start = self.eps_closure(self.initial)
        level = {(): start}
        if start & self.finals:
            found.add(())
        symbols = self.alphabet
        for _ in range(max_len):
            nxt = {}
            for w, states in level.items():
                for a in symbols:
                    s = self.step(states, a)
                    if s:
                        nxt[w + (a,)] = s
                        if s & self.finals:
                            found.add(w + (a,))
            if budget is not None and len(nxt) > budget:
                raise ResourceLimit(f"word enumeration exceeds budget {budget}", budget=budget)
            level = nxt
            if not level:
                break
        if key is None:
            key = lambda w: (len(w), w)
        return sorted(found, key=key)

    # -- constructions ---------------------------------------------------

    def determinize(self, alphabet: Iterable | None = None, budget: int | None = None) -> "Dfa":
        symbols = sorted(self.alphabet if alphabet is None else set(alphabet), key=repr)
        start = self.eps_closure(self.initial)
        index = {start: 0}
        order = [start]
        d = Dfa()
        d.add_state(final=bool(start & self.finals))
        queue = deque([start])
        while queue:
            s = queue.popleft()
            i = index[s]
            for a in symbols:
                t = self.step(s, a)
                if not t:
                    continue
                if t not in index:
                    if budget is not None and len(index) >= budget:
                        raise ResourceLimit(f"determinization exceeds {budget} states", budget=budget)
                    index[t] = d.add_state(final=bool(t & self.finals))
                    order.append(t)
                    queue.append(t)
                d.delta[i][a] = index[t]
        return d


def product(m1: Nfa, m2: Nfa, match: Callable | None = None, budget: int | None = None) -> Nfa:
    """Synchronized product of two automata (accessible part only).

    ``match(a, b)`` decides whether symbols pair up and returns the symbol of
    the product edge (or ``False``); by default symbols must be equal.
    """
    if match is None:
        match = lambda a, b: a if a == b else False
    if m1.has_epsilon():
        m1 = m1.remove_epsilon()
    if m2.has_epsilon():
        m2 = m2.remove_epsilon()
    m = Nfa()
    index: dict[tuple[int, int], int] = {}
    queue = deque()
    for p in sorted(m1.initial):
        for q in sorted(m2.initial):
            index[(p, q)] = m.add_state(initial=True, final=p in m1.finals and q in m2.finals)
            queue.append((p, q))
    while queue:
        p, q = queue.popleft()
        src = index[(p, q)]
        for a, ps in m1.delta[p].items():
            for b, qs in m2.delta[q].items():
                c = match(a, b)
                if c is False:
                    continue
                for p2 in ps:
                    for q2 in qs:
                        key = (p2, q2)
                        if key not in index:
                            if budget is not None and len(index) >= budget:
                                raise ResourceLimit(f"product exceeds {budget} states", budget=budget)
                            index[key] = m.add_state(final=p2 in m1.finals and q2 in m2.finals)
                            queue.append(key)
                        m.add_edge(src, c, index[key])
    return m


class Dfa:
    def __init__(self):
        self.n = 0
        self.start = 0
        self.finals: set[int] = set()
        self.delta: list[dict] = []

    def add_state(self, final=False) -> int:
        q = self.n
        self.n += 1
        self.delta.append({})
        if final:
            self.finals.add(q)
        return q

    def accepts(self, word: Iterable) -> bool:
        q = self.start
        for a in word:
            q = self.delta[q].get(a)
            if q is None:
                return False
        return q in self.finals

    def complete(self, alphabet: Iterable) -> "Dfa":
        symbols = list(alphabet)
        d = Dfa()
        for q in range(self.n):
            d.add_state(final=q in self.finals)
        d.start = self.start
        sink = d.add_state()
        for q in range(self.n):
            for a in symbols:
                d.delta[q][a] = self.delta[q].get(a, sink)
        for a in symbols:
            d.delta[sink][a] = sink
        return d

    def complement(self, alphabet: Iterable) -> "Dfa":
        d = self.complete(alphabet)
        d.finals = set(range(d.n)) - d.finals
        return d

    def minimize(self, alphabet: Iterable) -> "Dfa":
        """Moore partition refinement on the accessible, completed automaton,
        followed by removal of the dead class."""
        symbols = sorted(set(alphabet), key=repr)
        d = self.complete(symbols).to_nfa().restrict_accessible_dfa()
        block = [1 if q in d.finals else 0 for q in range(d.n)]
        while True:
            sig = {}
            new = []
            for q in range(d.n):
                key = (block[q],) + tuple(block[d.delta[q][a]] for a in symbols)
                new.append(sig.setdefault(key, len(sig)))
            if len(sig) == len(set(block)):
                block = new
                break
            block = new
        m = Dfa()
        count = max(block) + 1 if block else 0
        for b in range(count):
            m.add_state()
        for q in range(d.n):
            if q in d.finals:
                m.finals.add(block[q])
            for a in symbols:
                m.delta[block[q]][a] = block[d.delta[q][a]]
        m.start = block[d.start]
        return m.prune_dead()

    def prune_dead(self) -> "Dfa":
        live = self.to_nfa().coaccessible()
        if self.start not in live:
            e = Dfa()
            e.add_state()
            return e
        keep = sorted(live)
        index = {q: i for i, q in enumerate(keep)}
        m = Dfa()
        for q in keep:
            m.add_state(final=q in self.finals)
        m.start = index[self.start]
        for q in keep:
            for a, t in self.delta[q].items():
                if t in index:
                    m.delta[index[q]][a] = index[t]
        return m

    def to_nfa(self) -> "_DfaNfa":
        m = _DfaNfa()
        for q in range(self.n):
            m.add_state(initial=q == self.start, final=q in self.finals)
        for q in range(self.n):
            for a, t in self.delta[q].items():
                m.add_edge(q, a, t)
        return m

    def is_empty(self) -> bool:
        return self.to_nfa().is_empty()

    def is_finite(self) -> bool:
        return self.to_nfa().is_finite()

    def words(self, max_len: int, key: Callable | None = None) -> list[tuple]:
        return self.to_nfa().words(max_len, key=key)

    def num_edges(self) -> int:
        return sum(len(d) for d in self.delta)


class _DfaNfa(Nfa):
    def restrict_accessible_dfa(self) -> Dfa:
        keep = sorted(self.accessible())
        index = {q: i for i, q in enumerate(keep)}
        d = Dfa()
        for q in keep:
            d.add_state(final=q in self.finals)
        (start,) = self.initial
        d.start = index[start]
        for q in keep:
            for a, ts in self.delta[q].items():
                (t,) = ts
                d.delta[index[q]][a] = index[t]
        return d


def _has_cycle(n: int, succ: Callable[[int], Iterable[int]]) -> bool:
    color = [0] * n
    for root in range(n):
        if color[root]:
            continue
        stack = [(root, iter(succ(root)))]
        color[root] = 1
        while stack:
            p, it = stack[-1]
            for q in it:
                if color[q] == 1:
                    return True
                if color[q] == 0:
                    color[q] = 1
                    stack.append((q, iter(succ(q))))
                    break
            else:
                color[p] = 2
                stack.pop()
    return False


def strongly_connected_components(nodes: list, succ: Callable) -> list[list]:
    """Tarjan's algorithm, iterative.  Components come out in reverse
    topological order (sinks first)."""
    index: dict = {}
    low: dict = {}
    on_stack: set = set()
    stack: list = []
    comps: list[list] = []
    counter = 0
    for root in nodes:
        if root in index:
            continue
        work = [(root, iter(succ(root)))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(succ(w))))
                    advanced = True
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                u = work[-1][0]
                low[u] = min(low[u], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                comps.append(comp)
    return comps
