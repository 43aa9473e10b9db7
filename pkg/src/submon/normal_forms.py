"""Lexicographic normal forms and the rational description β.

For a graded M and a total order on S, β(u) is the dictionary-least S-word
spelling the same element as u.  With L the language of a trimmed relation
automaton Γ (N vertices), the set of normal forms is

    B = S* \\ π₂(L ∩ Z* R_lang)

where Z pairs identical letters on both sides, and R_lang is the set of
Ŝ-words whose first disagreement puts a smaller generator on the left,
with fewer than N one-sided letters in between.  The description itself
is π(L ∩ π₂^-1(B)).

Generator orders are lists of generator indices from least to greatest;
``None`` means the order the generators were given in.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .automata import EPS, Dfa, Nfa, product
from .config import DEFAULT_BUDGET, Budget
from .errors import NotGraded, ResourceLimit
from .gradedness import is_graded
from .preimage import enumerate_words, longest_word, preimage_grammar
from .relation import LEFT, RIGHT, PairLetter, RelationAutomaton, build_gamma, certified_cutoff, pair_alphabet
from .submonoid import SubmonoidSpec, SWord, order_key


def _normalize_order(k: int, order) -> tuple[int, ...]:
    if order is None:
        return tuple(range(k))
    order = tuple(order)
    if sorted(order) != list(range(k)):
        raise ValueError(f"order must be a permutation of 0..{k - 1}")
    return order


@dataclass(eq=False)
class PairWordAutomaton:
    """An automaton over Ŝ standing for the relation π(L) ⊆ S* × S*."""

    k: int
    nfa: Nfa

    def accepts(self, word: Sequence[PairLetter]) -> bool:
        return self.nfa.accepts(word)

    def pairs(self, n: int, budget: int | None = None) -> set[tuple[SWord, SWord]]:
        """π(L) with both sides of length <= n.

        The set of states reachable by shuffles of (u, v) is the union of
        one step from (u minus its last letter, v) and (u, v minus its last).
        """
        m = self.nfa
        reach = {((), ()): m.eps_closure(m.initial)}
        frontier = [((), ())]
        out = set()
        seen = 0
        while frontier:
            nxt = {}
            for u, v in frontier:
                states = reach[(u, v)]
                if states & m.finals:
                    out.add((u, v))
                for i in range(self.k):
                    for side, key in ((LEFT, (u + (i,), v)), (RIGHT, (u, v + (i,)))):
                        if len(key[0]) > n or len(key[1]) > n:
                            continue
                        t = m.step(states, PairLetter(side, i))
                        if t:
                            nxt[key] = nxt.get(key, frozenset()) | t
            reach.update(nxt)
            frontier = list(nxt)
            seen += len(frontier)
            if budget is not None and seen > budget:
                raise ResourceLimit(f"pair enumeration exceeds {budget} states", budget=budget, argument=n)
        return out


# -- the languages Z, T1, T2, R_lang ------------------------------------------


def z_star_r(k: int, bound: int, order=None) -> Nfa:
    """Automaton for Z* R_lang over Ŝ with one-sided stretches shorter than ``bound``.

    States: the Z* hub, the middles of Z-blocks, the counters for T1 (left
    stretch after a left letter x) and T2 (right stretch after a right
    letter x'), and an accepting sink for the free suffix.
    """
    order = _normalize_order(k, order)
    rank = {g: r for r, g in enumerate(order)}
    m = Nfa()
    hub = m.add_state(initial=True)
    done = m.add_state(final=True)
    for a in pair_alphabet(k):
        m.add_edge(done, a, done)
    for x in range(k):
        # Z: (x,1)(1,x) and (1,x)(x,1)
        mid = m.add_state()
        m.add_edge(hub, PairLetter(LEFT, x), mid)
        m.add_edge(mid, PairLetter(RIGHT, x), hub)
        mid = m.add_state()
        m.add_edge(hub, PairLetter(RIGHT, x), mid)
        m.add_edge(mid, PairLetter(LEFT, x), hub)
    for x in range(k):
        smaller = [y for y in range(k) if rank[y] < rank[x]]
        larger = [y for y in range(k) if rank[y] > rank[x]]
        # (x,1) t1 (1,x') with x < x', |t1| < bound
        if larger:
            _counter(m, hub, PairLetter(LEFT, x), LEFT, [PairLetter(RIGHT, y) for y in larger], done, k, bound)
        # (1,x') t2 (x,1) with x < x', |t2| < bound; here x plays x'
        if smaller:
            _counter(m, hub, PairLetter(RIGHT, x), RIGHT, [PairLetter(LEFT, y) for y in smaller], done, k, bound)
    return m


def _counter(m: Nfa, hub, first, side, exits, done, k, bound):
    chain = [m.add_state()]
    m.add_edge(hub, first, chain[0])
    for c in range(1, bound):
        chain.append(m.add_state())
        for g in range(k):
            m.add_edge(chain[c - 1], PairLetter(side, g), chain[c])
    for st in chain:
        for e in exits:
            m.add_edge(st, e, done)


def _pi2(m: Nfa) -> Nfa:
    return m.map_symbols(lambda x: x.gen if x.side == RIGHT else EPS)


def minimal_language(gamma: RelationAutomaton, order=None, budget: Budget = DEFAULT_BUDGET) -> Dfa:
    """Minimal DFA over generator indices for the set B of normal forms."""
    k = gamma.spec.k
    L = gamma.to_nfa()
    bound = max(gamma.num_vertices, 1)
    bad = product(L, z_star_r(k, bound, order), budget=budget.states)
    proj = _pi2(bad.trim() if not bad.is_empty() else bad)
    letters = range(k)
    d = proj.determinize(letters, budget=budget.states)
    return d.complement(letters).minimize(letters)


def _lift_right(b: Dfa, k: int) -> Nfa:
    """π₂^-1(B): left letters loop, right letters drive B."""
    m = Nfa()
    for q in range(b.n):
        m.add_state(initial=q == b.start, final=q in b.finals)
    for q in range(b.n):
        for g in range(k):
            m.add_edge(q, PairLetter(LEFT, g), q)
            t = b.delta[q].get(g)
            if t is not None:
                m.add_edge(q, PairLetter(RIGHT, g), t)
    return m


@dataclass(eq=False)
class DescriptionTransducer:
    spec: SubmonoidSpec
    order: tuple
    gamma: RelationAutomaton
    B: Dfa
    relation: PairWordAutomaton  # accepts exactly the pairs (u, β(u))

    @property
    def certified(self) -> bool:
        return self.gamma.certified

    def in_normal_form(self, w: Sequence[int]) -> bool:
        return self.B.accepts(w)

    def accepts(self, u: Sequence[int], v: Sequence[int]) -> bool:
        m = self.relation.nfa
        states = {((0, 0), q) for q in m.eps_closure(m.initial)}
        todo = list(states)
        while todo:
            (i, j), q = todo.pop()
            for side, pos, w in ((LEFT, i, u), (RIGHT, j, v)):
                if pos == len(w):
                    continue
                nij = (i + 1, j) if side == LEFT else (i, j + 1)
                for t in m.delta[q].get(PairLetter(side, w[pos]), ()):
                    if (nij, t) not in states:
                        states.add((nij, t))
                        todo.append((nij, t))
        return any(ij == (len(u), len(v)) and q in m.finals for ij, q in states)

    def outputs(self, u: Sequence[int], max_len: int) -> list[SWord]:
        """Every v with |v| <= max_len and (u, v) accepted (one, when functional)."""
        m = self.relation.nfa
        start = [(0, q, ()) for q in m.initial]
        seen = set(start)
        todo = deque(start)
        out = set()
        while todo:
            i, q, v = todo.popleft()
            if i == len(u) and q in m.finals:
                out.add(v)
            for x, ts in m.delta[q].items():
                if x.side == LEFT:
                    if i == len(u) or x.gen != u[i]:
                        continue
                    nxt = [(i + 1, t, v) for t in ts]
                else:
                    if len(v) == max_len:
                        continue
                    nxt = [(i, t, v + (x.gen,)) for t in ts]
                for c in nxt:
                    if c not in seen:
                        seen.add(c)
                        todo.append(c)
        return sorted(out, key=lambda w: (len(w), w))

    def transduce(self, u: Sequence[int]) -> SWord:
        """β(u): follow any accepting path whose left side reads u.

        Configurations are (letters of u consumed, state); a trimmed Γ of a
        graded monoid has no long one-sided paths, so this search is finite.
        """
        m = self.relation.nfa
        u = tuple(u)
        parent: dict = {}
        todo = deque()
        for q in sorted(m.initial):
            parent[(0, q)] = None
            todo.append((0, q))
        while todo:
            i, q = cfg = todo.popleft()
            if i == len(u) and q in m.finals:
                out = []
                while parent[cfg] is not None:
                    cfg, g = parent[cfg]
                    if g is not None:
                        out.append(g)
                return tuple(reversed(out))
            for x, ts in m.delta[q].items():
                if x.side == LEFT and (i == len(u) or x.gen != u[i]):
                    continue
                ni = i + 1 if x.side == LEFT else i
                for t in ts:
                    if (ni, t) not in parent:
                        parent[(ni, t)] = (cfg, x.gen if x.side == RIGHT else None)
                        todo.append((ni, t))
        raise ValueError(f"no output for {u}: the relation automaton misses this class")


def description(gamma: RelationAutomaton, B: Dfa, order=None, budget: Budget = DEFAULT_BUDGET) -> DescriptionTransducer:
    k = gamma.spec.k
    rel = product(gamma.to_nfa(), _lift_right(B, k), budget=budget.states)
    rel = rel.trim() if not rel.is_empty() else rel
    return DescriptionTransducer(gamma.spec, _normalize_order(k, order), gamma, B, PairWordAutomaton(k, rel))


@lru_cache(maxsize=64)
def description_for(
    spec: SubmonoidSpec, order: tuple | None = None, cutoff: int | None = None, budget: Budget = DEFAULT_BUDGET
) -> DescriptionTransducer:
    """Description built on Γ^cutoff (the certified cutoff when None)."""
    _require_graded(spec, budget)
    certified = cutoff is None
    if certified:
        cutoff = certified_cutoff(spec, budget)
    gamma = build_gamma(spec, cutoff, budget, trim=True, certified=certified)
    B = minimal_language(gamma, order, budget)
    return description(gamma, B, order, budget)


def _require_graded(spec, budget):
    verdict = is_graded(spec, budget)
    if not verdict.graded:
        raise NotGraded(f"{spec} is not graded", witness=verdict.witness)


def normalize_oracle(spec: SubmonoidSpec, u: Sequence[int], order=None, budget: Budget = DEFAULT_BUDGET) -> SWord:
    """Least spelling of α(u), by enumerating the whole (finite) class."""
    _require_graded(spec, budget)
    gr = preimage_grammar(spec, spec.evaluate(u), budget)
    cls = enumerate_words(gr, longest_word(gr), budget.ball)
    return min(cls, key=order_key(_normalize_order(spec.k, order)))


def normalize(
    spec: SubmonoidSpec,
    u: Sequence[int],
    mode: str = "transducer",
    order=None,
    cutoff: int | None = None,
    budget: Budget = DEFAULT_BUDGET,
) -> SWord:
    """β(u).  ``mode`` is ``transducer`` or ``oracle``; ``cutoff`` selects an
    adaptive relation automaton for the transducer (certified when None)."""
    u = tuple(u)
    if mode == "oracle":
        return normalize_oracle(spec, u, order, budget)
    if mode != "transducer":
        raise ValueError(f"unknown mode {mode!r}")
    order = None if order is None else tuple(order)
    return description_for(spec, order, cutoff, budget).transduce(u)
