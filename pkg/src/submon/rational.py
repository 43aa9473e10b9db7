"""Rational subsets of a free group, represented by automata in Benois form.

A ``GroupNfa`` is any automaton over the letters of F(A) (ε allowed); the
subset it represents is the set of reduced forms of its accepted words.
``benois`` saturates it with ε-edges for every path labelled
``x (ε)* x^-1`` and then keeps only reduced words, after which membership,
intersection and complement become plain language operations.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .automata import EPS, Nfa, product
from .config import DEFAULT_BUDGET, Budget
from .errors import IdentityGenerator, RankMismatch, ResourceLimit
from .submonoid import SubmonoidSpec
from .words import Word, alphabet, as_word, letter_key


@dataclass(frozen=True, eq=False)
class GroupNfa:
    rank: int
    nfa: Nfa

    @property
    def states(self) -> int:
        return self.nfa.n

    def transitions(self) -> list[tuple[int, int | None, int]]:
        return sorted(self.nfa.edges(), key=lambda e: (e[0], 0 if e[1] is None else letter_key(e[1]), e[2]))


@dataclass(frozen=True, eq=False)
class RatSetAutomaton:
    """ε-free automaton accepting exactly the reduced forms of a subset of F."""

    rank: int
    nfa: Nfa

    @property
    def states(self) -> int:
        return self.nfa.n

    def transitions(self):
        return GroupNfa.transitions(self)

    def __contains__(self, g) -> bool:
        return member(g, self)


def _check_budget(n: int, budget: Budget):
    if n > budget.states:
        raise ResourceLimit(f"automaton grows past {budget.states} states", budget=budget.states)


# -- construction ----------------------------------------------------------


def flower(spec: SubmonoidSpec) -> GroupNfa:
    """One base state (initial and terminal) with a loop spelling each generator."""
    m = Nfa()
    base = m.add_state(initial=True, final=True)
    for g in spec.generators:
        if not g:
            raise IdentityGenerator("the identity cannot be a generator")
        p = base
        for x in g[:-1]:
            q = m.add_state()
            m.add_edge(p, x, q)
            p = q
        m.add_edge(p, g[-1], base)
    return GroupNfa(spec.rank, m)


def finite_set(words: Iterable, rank: int) -> RatSetAutomaton:
    """Automaton for a finite subset of F given by words (reduced on the way in)."""
    m = Nfa()
    start = m.add_state(initial=True)
    for w in words:
        w = as_word(w, rank)
        p = start
        for x in w:
            q = m.add_state()
            m.add_edge(p, x, q)
            p = q
        m.finals.add(p)
    return RatSetAutomaton(rank, m.trim() if m.finals else _empty_nfa())


def _empty_nfa() -> Nfa:
    m = Nfa()
    m.add_state(initial=True)
    return m


def empty_set(rank: int) -> RatSetAutomaton:
    return RatSetAutomaton(rank, _empty_nfa())


def all_reduced(rank: int) -> RatSetAutomaton:
    """The whole group F."""
    return RatSetAutomaton(rank, _reduced_words(rank))


def _reduced_words(rank: int) -> Nfa:
    letters = alphabet(rank)
    m = Nfa()
    start = m.add_state(initial=True, final=True)
    last = {x: m.add_state(final=True) for x in letters}
    for x in letters:
        m.add_edge(start, x, last[x])
        for y in letters:
            if y != -x:
                m.add_edge(last[x], y, last[y])
    return m


def saturate(nfa: Nfa, budget: Budget = DEFAULT_BUDGET) -> Nfa:
    """Add ε-edges p -> q whenever p reaches q along ``x ε* x^-1`` until stable."""
    m = nfa.copy()
    _check_budget(m.n, budget)
    changed = True
    while changed:
        changed = False
        closures = [m.eps_closure([p]) for p in range(m.n)]
        for p in range(m.n):
            for x, mids in list(m.delta[p].items()):
                if x is EPS:
                    continue
                for p1 in mids:
                    for p2 in closures[p1]:
                        for q in m.delta[p2].get(-x, ()):
                            if m.add_edge(p, EPS, q):
                                changed = True
    return m


def restrict_to_reduced(m: Nfa) -> Nfa:
    """Product of an ε-free automaton with the reduced-word automaton."""
    out = Nfa()
    index: dict[tuple[int, int], int] = {}
    stack = []
    for p in sorted(m.initial):
        index[(p, 0)] = out.add_state(initial=True, final=p in m.finals)
        stack.append((p, 0))
    while stack:
        p, last = stack.pop()
        src = index[(p, last)]
        for x, qs in m.delta[p].items():
            if x == -last:
                continue
            for q in qs:
                key = (q, x)
                if key not in index:
                    index[key] = out.add_state(final=q in m.finals)
                    stack.append(key)
                out.add_edge(src, x, index[key])
    return out.trim() if out.finals else _empty_nfa()


def benois(nfa: GroupNfa | Nfa, budget: Budget = DEFAULT_BUDGET, rank: int | None = None) -> RatSetAutomaton:
    """Benois normal form of a group automaton."""
    if isinstance(nfa, GroupNfa):
        rank, nfa = nfa.rank, nfa.nfa
    m = saturate(nfa, budget).remove_epsilon()
    out = restrict_to_reduced(m)
    _check_budget(out.n, budget)
    return RatSetAutomaton(rank, out)


def is_saturated(nfa: Nfa) -> bool:
    return saturate(nfa).num_edges() == nfa.num_edges()


@lru_cache(maxsize=256)
def monoid(spec: SubmonoidSpec) -> RatSetAutomaton:
    """Benois automaton of the submonoid M generated by ``spec``."""
    return benois(flower(spec))


@lru_cache(maxsize=256)
def monoid_nonidentity(spec: SubmonoidSpec) -> RatSetAutomaton:
    """M minus the identity."""
    return minus_identity(monoid(spec))


@lru_cache(maxsize=256)
def quotient_set(spec: SubmonoidSpec) -> RatSetAutomaton:
    """M^-1 M."""
    m = monoid(spec)
    return concat(inverse(m), m)


# -- queries ----------------------------------------------------------------


def _word_in(g, r) -> Word:
    w = as_word(g)
    if any(abs(x) > r.rank for x in w):
        raise RankMismatch(f"word {g!r} does not live in rank {r.rank}")
    return w


def member(g, r: RatSetAutomaton) -> bool:
    return r.nfa.accepts(_word_in(g, r))


def is_empty(r: RatSetAutomaton) -> bool:
    return r.nfa.is_empty()


def is_finite_set(r: RatSetAutomaton) -> bool:
    return r.nfa.is_finite()


def elements(r: RatSetAutomaton, max_len: int, budget: int | None = None) -> list[Word]:
    """Members of length <= max_len in shortlex order."""
    return list(walk(r, max_len, budget))


def walk(r: RatSetAutomaton, max_len: int, budget: int | None = None) -> Iterator[Word]:
    """Yield members of length <= max_len in shortlex order.

    Only prefixes of members are visited: the automaton is trim, so a
    prefix with no live state set cannot be extended to a member.
    """
    m = r.nfa
    letters = alphabet(r.rank)
    start = frozenset(m.initial)
    level = [((), start)] if start else []
    visited = 0
    for depth in range(max_len + 1):
        nxt = []
        for w, states in level:
            if states & m.finals:
                yield w
            if depth == max_len:
                continue
            for x in letters:
                t = set()
                for p in states:
                    t |= m.delta[p].get(x, set())
                if t:
                    nxt.append((w + (x,), frozenset(t)))
        visited += len(nxt)
        if budget is not None and visited > budget:
            raise ResourceLimit(
                f"walk up to length {max_len} visits more than {budget} elements",
                budget=budget,
                argument=max_len,
            )
        level = nxt
        if not level:
            return


# -- operations -------------------------------------------------------------


def _union_nfa(m1: Nfa, m2: Nfa) -> tuple[Nfa, int]:
    m = m1.copy()
    off = m.n
    for q in range(m2.n):
        m.add_state(initial=q in m2.initial, final=q in m2.finals)
    for p, a, q in m2.edges():
        m.add_edge(p + off, a, q + off)
    return m, off


def _same_rank(r1, r2) -> int:
    if r1.rank != r2.rank:
        raise RankMismatch(f"rank {r1.rank} vs rank {r2.rank}")
    return r1.rank


def union(r1: RatSetAutomaton, r2: RatSetAutomaton, budget: Budget = DEFAULT_BUDGET) -> RatSetAutomaton:
    rank = _same_rank(r1, r2)
    m, _ = _union_nfa(r1.nfa, r2.nfa)
    return benois(m, budget, rank)


def concat(r1: RatSetAutomaton, r2: RatSetAutomaton, budget: Budget = DEFAULT_BUDGET) -> RatSetAutomaton:
    rank = _same_rank(r1, r2)
    m, off = _union_nfa(r1.nfa, r2.nfa)
    m.initial = set(r1.nfa.initial)
    m.finals = {q + off for q in r2.nfa.finals}
    for f in r1.nfa.finals:
        for i in r2.nfa.initial:
            m.add_edge(f, EPS, i + off)
    return benois(m, budget, rank)


def star(r: RatSetAutomaton, budget: Budget = DEFAULT_BUDGET) -> RatSetAutomaton:
    """The submonoid generated by the subset."""
    m = r.nfa.copy()
    hub = m.add_state()
    for i in m.initial:
        m.add_edge(hub, EPS, i)
    for f in m.finals:
        m.add_edge(f, EPS, hub)
    m.initial = {hub}
    m.finals = {hub}
    return benois(m, budget, r.rank)


def inverse(r: RatSetAutomaton) -> RatSetAutomaton:
    """Elementwise inverse; the reversed, sign-flipped language stays reduced."""
    return RatSetAutomaton(r.rank, r.nfa.reverse(lambda x: -x))


def intersect(r1: RatSetAutomaton, r2: RatSetAutomaton, budget: Budget = DEFAULT_BUDGET) -> RatSetAutomaton:
    rank = _same_rank(r1, r2)
    m = product(r1.nfa, r2.nfa, budget=budget.states)
    return RatSetAutomaton(rank, m.trim() if not m.is_empty() else _empty_nfa())


def complement_in_reduced(r: RatSetAutomaton, budget: Budget = DEFAULT_BUDGET) -> RatSetAutomaton:
    """F minus the subset.  The only operation that determinizes."""
    letters = alphabet(r.rank)
    d = r.nfa.determinize(letters, budget=budget.states).complement(letters)
    out = restrict_to_reduced(d.to_nfa())
    return RatSetAutomaton(r.rank, out)


def difference(r1: RatSetAutomaton, r2: RatSetAutomaton, budget: Budget = DEFAULT_BUDGET) -> RatSetAutomaton:
    return intersect(r1, complement_in_reduced(r2, budget), budget)


def minus_identity(r: RatSetAutomaton) -> RatSetAutomaton:
    """The subset with 1 removed (the empty word dropped from the language)."""
    m = r.nfa.copy()
    fresh = {}
    for i in sorted(m.initial):
        j = m.add_state()
        fresh[i] = j
        for a, qs in list(m.delta[i].items()):
            for q in qs:
                m.add_edge(j, a, q)
    m.initial = set(fresh.values())
    out = m.trim() if not m.is_empty() else _empty_nfa()
    return RatSetAutomaton(r.rank, out)


