"""Context-free preimages α^-1(g) ⊆ S* of a group element.

``build_pda`` makes a pushdown automaton whose stack, after reading a prefix
w, holds ``bottom · reduce(g^-1 α(w))``; it accepts by empty stack once the
stack is back to the bare bottom symbol.  ``to_grammar`` applies the triple
construction lazily from the start symbol and trims the result.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Hashable, Sequence

from .automata import strongly_connected_components
from .config import DEFAULT_BUDGET, Budget
from .errors import EmptyLanguage, InfiniteLanguage, ResourceLimit
from .submonoid import SubmonoidSpec, SWord
from .words import Word, as_word, format_word, letter_char

BOTTOM = 0
START, BASE, FINAL = "start", "base", "final"


@dataclass(frozen=True)
class Move:
    src: Hashable
    read: int | None  # generator index, None for an ε-move
    pop: int
    dst: Hashable
    push: tuple  # replaces the popped symbol; first element ends on top


@dataclass(eq=False)
class PreimagePda:
    spec: SubmonoidSpec
    target: Word
    states: list
    moves: list[Move]
    index: dict = field(repr=False, default_factory=dict)

    def __post_init__(self):
        index = defaultdict(list)
        for m in self.moves:
            index[(m.src, m.pop)].append(m)
        self.index = dict(index)

    def moves_from(self, state, symbol) -> list[Move]:
        return self.index.get((state, symbol), [])

    def pop_targets(self) -> dict[int, set]:
        """Control states that can be entered right after popping each symbol."""
        out: dict[int, set] = defaultdict(set)
        for m in self.moves:
            if not m.push:
                out[m.pop].add(m.dst)
        return out

    def run(self, sword: Sequence[int]) -> list[tuple[int, ...]]:
        """Simulate the deterministic reading phase; return the stack (bottom
        first) after the preload and after every micro-step."""
        state, stack = START, [BOTTOM]
        trace = []

        def fire(read):
            nonlocal state
            (m,) = [m for m in self.moves_from(state, stack[-1]) if m.read == read and m.dst != FINAL]
            stack.pop()
            stack.extend(reversed(m.push))
            state = m.dst
            trace.append(tuple(stack))

        fire(None)
        for i in sword:
            fire(i)
            while state != BASE:
                fire(None)
        return trace

    def accepts(self, sword: Sequence[int]) -> bool:
        trace = self.run(sword)
        return trace[-1] == (BOTTOM,)


def build_pda(spec: SubmonoidSpec, g) -> PreimagePda:
    """PDA recognizing {w ∈ S* : α(w) = g}.

    Reading generator i moves to a micro-state; each following ε-move handles
    one letter of the generator, cancelling it against the top of the stack
    or pushing it, so every move pops exactly one symbol.
    """
    g = as_word(g, spec.rank)
    states = [START, BASE, FINAL]
    moves = [Move(START, None, BOTTOM, BASE, tuple(-x for x in g) + (BOTTOM,))]
    symbols = [BOTTOM] + [x for i in range(1, spec.rank + 1) for x in (i, -i)]
    for i, s in enumerate(spec.generators):
        mids = [("mid", i, j) for j in range(len(s))]
        states.extend(mids)
        for X in symbols:
            moves.append(Move(BASE, i, X, mids[0], (X,)))
        for j, x in enumerate(s):
            nxt = mids[j + 1] if j + 1 < len(s) else BASE
            for X in symbols:
                push = () if X == -x else (x, X)
                moves.append(Move(mids[j], None, X, nxt, push))
    moves.append(Move(BASE, None, BOTTOM, FINAL, ()))
    return PreimagePda(spec, g, states, moves)


# -- grammar ----------------------------------------------------------------

Production = tuple  # (terminal generator index or None, tuple of nonterminals)


@dataclass(eq=False)
class PreimageGrammar:
    spec: SubmonoidSpec
    target: Word
    start: Hashable
    productions: dict  # nonterminal -> tuple[Production, ...]
    trimmed: bool = True
    generated: int = 0  # nonterminals created before trimming

    @property
    def nonterminals(self) -> int:
        return len(self.productions)

    @property
    def size(self) -> int:
        return sum(len(p) for p in self.productions.values())

    def summary(self) -> dict:
        return {
            "target": format_word(self.target),
            "nonterminals": self.nonterminals,
            "productions": self.size,
            "generated_nonterminals": self.generated,
            "empty": is_empty(self),
            "finite": is_finite(self) if not is_empty(self) else True,
        }

    def dump(self) -> str:
        names = {nt: f"N{i}" for i, nt in enumerate(self.productions)}
        lines = [f"# preimage of {format_word(self.target) or '1'}; start {names.get(self.start, 'S')}"]
        for nt, prods in self.productions.items():
            for term, body in prods:
                rhs = []
                if term is not None:
                    rhs.append(f"[{format_word(self.spec.generators[term])}]")
                rhs.extend(names[b] for b in body)
                lines.append(f"{names[nt]} -> {' '.join(rhs) or 'ε'}    # {_nt_label(nt)}")
        return "\n".join(lines)


def _nt_label(nt) -> str:
    def sym(x):
        return "⊥" if x == BOTTOM else letter_char(x)

    if nt[0] == "seq":
        return f"seq{nt[1]}.{nt[2]}({nt[3]},{nt[4]})"
    p, x, q = nt
    return f"[{p},{sym(x)},{q}]"


def to_grammar(pda: PreimagePda, budget: Budget = DEFAULT_BUDGET) -> PreimageGrammar:
    """Triple construction, generated top-down from the start symbol, then trimmed."""
    pops = pda.pop_targets()
    start = (START, BOTTOM, FINAL)
    prods: dict = {}
    todo = [start]
    limit = budget.grammar

    def need(nt):
        if nt not in prods and nt not in pending:
            pending.add(nt)
            todo.append(nt)

    pending = {start}
    while todo:
        nt = todo.pop()
        pending.discard(nt)
        if nt in prods:
            continue
        if len(prods) >= limit:
            raise ResourceLimit(f"grammar exceeds {limit} nonterminals", budget=limit)
        out = []
        if nt[0] == "seq":
            _, mi, i, s, q = nt
            push = pda.moves[mi].push
            if i == len(push) - 1:
                body = (s, push[i], q)
                out.append((None, (body,)))
                need(body)
            else:
                for t in sorted(pops.get(push[i], ()), key=repr):
                    a, b = (s, push[i], t), ("seq", mi, i + 1, t, q)
                    out.append((None, (a, b)))
                    need(a)
                    need(b)
        else:
            p, X, q = nt
            for m in pda.moves_from(p, X):
                k = len(m.push)
                if k == 0:
                    if m.dst == q:
                        out.append((m.read, ()))
                elif k == 1:
                    body = (m.dst, m.push[0], q)
                    out.append((m.read, (body,)))
                    need(body)
                elif k == 2:
                    for s in sorted(pops.get(m.push[0], ()), key=repr):
                        a, b = (m.dst, m.push[0], s), (s, m.push[1], q)
                        out.append((m.read, (a, b)))
                        need(a)
                        need(b)
                else:
                    seq = ("seq", pda.moves.index(m), 0, m.dst, q)
                    out.append((m.read, (seq,)))
                    need(seq)
        prods[nt] = out
    generated = len(prods)
    return PreimageGrammar(pda.spec, pda.target, start, _trim(prods, start), True, generated)


def _trim(prods: dict, start) -> dict:
    # productive: bottom-up with per-production counters of unproven children
    waiting = defaultdict(list)
    missing = {}
    productive = set()
    ready = []
    for nt, ps in prods.items():
        for j, (_, body) in enumerate(ps):
            missing[(nt, j)] = len(body)
            if not body:
                ready.append(nt)
            for b in body:
                waiting[b].append((nt, j))
    while ready:
        nt = ready.pop()
        if nt in productive:
            continue
        productive.add(nt)
        for key in waiting.get(nt, ()):
            missing[key] -= 1
            if missing[key] == 0:
                ready.append(key[0])
    useful = {
        nt: tuple(p for p in ps if all(b in productive for b in p[1]))
        for nt, ps in prods.items()
        if nt in productive
    }
    if start not in useful:
        return {}
    reach = {start}
    stack = [start]
    while stack:
        nt = stack.pop()
        for _, body in useful[nt]:
            for b in body:
                if b not in reach:
                    reach.add(b)
                    stack.append(b)
    return {nt: useful[nt] for nt in prods if nt in reach}


@lru_cache(maxsize=4096)
def _cached_grammar(spec: SubmonoidSpec, g: Word, budget: Budget) -> PreimageGrammar:
    return to_grammar(build_pda(spec, g), budget)


def preimage_grammar(spec: SubmonoidSpec, g, budget: Budget = DEFAULT_BUDGET) -> PreimageGrammar:
    return _cached_grammar(spec, as_word(g, spec.rank), budget)


# -- analysis -----------------------------------------------------------------


def is_empty(gr: PreimageGrammar) -> bool:
    return gr.start not in gr.productions


def _nonempty_capable(gr: PreimageGrammar) -> set:
    grows = set()
    changed = True
    while changed:
        changed = False
        for nt, ps in gr.productions.items():
            if nt in grows:
                continue
            if any(t is not None or any(b in grows for b in body) for t, body in ps):
                grows.add(nt)
                changed = True
    return grows


def is_finite(gr: PreimageGrammar) -> bool:
    """A trimmed grammar generates infinitely many words iff some nonterminal
    derives ``u A v`` with ``uv`` nonempty, i.e. a strongly connected
    component of the dependency graph contains an edge whose production
    carries extra nonempty material."""
    if is_empty(gr):
        return True
    grows = _nonempty_capable(gr)
    nodes = list(gr.productions)
    comps = strongly_connected_components(
        nodes, lambda nt: (b for _, body in gr.productions[nt] for b in body)
    )
    comp_of = {nt: i for i, c in enumerate(comps) for nt in c}
    for nt, ps in gr.productions.items():
        for t, body in ps:
            for j, b in enumerate(body):
                if comp_of[b] != comp_of[nt]:
                    continue
                others = body[:j] + body[j + 1 :]
                if t is not None or any(o in grows for o in others):
                    return False
    return True


def longest_word(gr: PreimageGrammar) -> int:
    if is_empty(gr):
        raise EmptyLanguage(f"α^-1({format_word(gr.target)}) is empty")
    if not is_finite(gr):
        raise InfiniteLanguage(f"α^-1({format_word(gr.target)}) is infinite")
    best: dict = {}
    changed = True
    while changed:
        changed = False
        for nt, ps in gr.productions.items():
            for t, body in ps:
                if any(b not in best for b in body):
                    continue
                v = (t is not None) + sum(best[b] for b in body)
                if v > best.get(nt, -1):
                    best[nt] = v
                    changed = True
    return best[gr.start]


def enumerate_words(gr: PreimageGrammar, max_len: int, budget: int | None = None) -> list[SWord]:
    """All generated S-words of length <= max_len, each once, shortlex-sorted."""
    if is_empty(gr):
        return []
    words: dict = defaultdict(set)
    changed = True
    total = 0
    while changed:
        changed = False
        for nt, ps in gr.productions.items():
            acc = words[nt]
            before = len(acc)
            for t, body in ps:
                partial = {(t,) if t is not None else ()}
                for b in body:
                    partial = {u + v for u in partial for v in words[b] if len(u) + len(v) <= max_len}
                    if not partial:
                        break
                acc |= {w for w in partial if len(w) <= max_len}
            if len(acc) != before:
                changed = True
                total += len(acc) - before
                if budget is not None and total > budget:
                    raise ResourceLimit(f"enumeration exceeds {budget} words", budget=budget)
    return sorted(words[gr.start], key=lambda w: (len(w), w))

