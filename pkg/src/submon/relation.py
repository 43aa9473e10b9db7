"""The relation automaton Γ and its ball restrictions Γ^c.

Γ reads words over the pair alphabet Ŝ, one generator at a time on either
side.  Its states are elements of M^-1 M: reading (s, 1) moves g to s^-1 g
and reading (1, s) moves g to g s, so after a shuffle of prefixes p, q the
state is α(p)^-1 α(q).  Starting and ending at 1 means α(u) = α(v).

``build_gamma`` keeps only states of length <= c.  That is always sound;
it is complete once c reaches the certified cutoff, and in practice usually
much earlier (``adaptive`` mode).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .automata import Nfa
from .config import DEFAULT_BUDGET, Budget
from .errors import ResourceLimit
from .geometry import constants
from .rational import quotient_set, walk
from .submonoid import SubmonoidSpec, SWord, swords
from .words import Word, format_word, inv, mul

LEFT, RIGHT = 1, 2


@dataclass(frozen=True, order=True)
class PairLetter:
    side: int  # LEFT or RIGHT
    gen: int

    def __post_init__(self):
        if self.side not in (LEFT, RIGHT):
            raise ValueError("side must be LEFT (1) or RIGHT (2)")

    def format(self, spec: SubmonoidSpec | None = None) -> str:
        g = format_word(spec.generators[self.gen]) if spec else str(self.gen + 1)
        return f"({g},1)" if self.side == LEFT else f"(1,{g})"

    def __str__(self):
        return self.format()


def pair_alphabet(k: int) -> list[PairLetter]:
    return [PairLetter(LEFT, i) for i in range(k)] + [PairLetter(RIGHT, i) for i in range(k)]


def project(word: Sequence[PairLetter]) -> tuple[SWord, SWord]:
    """π: the left and right S-words of a word over Ŝ."""
    return (
        tuple(x.gen for x in word if x.side == LEFT),
        tuple(x.gen for x in word if x.side == RIGHT),
    )


def step(spec: SubmonoidSpec, g: Word, x: PairLetter) -> Word:
    s = spec.generators[x.gen]
    return mul(inv(s), g) if x.side == LEFT else mul(g, s)


@dataclass(eq=False)
class RelationAutomaton:
    spec: SubmonoidSpec
    cutoff: int
    certified: bool
    vertices: list  # Word per state id; id 0 is the identity
    delta: dict  # (state id, PairLetter) -> state id
    trimmed: bool = False
    index: dict = field(repr=False, default_factory=dict)

    def __post_init__(self):
        self.index = {g: i for i, g in enumerate(self.vertices)}

    @property
    def base(self) -> int:
        return 0

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_edges(self) -> int:
        return len(self.delta)

    def target(self, state: int, x: PairLetter) -> int | None:
        return self.delta.get((state, x))

    def edges(self) -> Iterator[tuple[int, PairLetter, int]]:
        for (p, x), q in self.delta.items():
            yield p, x, q

    def to_nfa(self) -> Nfa:
        m = Nfa()
        for i in range(self.num_vertices):
            m.add_state(initial=i == 0, final=i == 0)
        for p, x, q in self.edges():
            m.add_edge(p, x, q)
        return m

    def summary(self) -> dict:
        return {
            "cutoff": self.cutoff,
            "certified": self.certified,
            "trimmed": self.trimmed,
            "vertices": self.num_vertices,
            "edges": self.num_edges,
        }


def build_gamma(
    spec: SubmonoidSpec,
    cutoff: int,
    budget: Budget = DEFAULT_BUDGET,
    *,
    trim: bool = False,
    certified: bool = False,
) -> RelationAutomaton:
    """Γ^c: states are the elements of M^-1 M of length <= cutoff."""
    if cutoff < 0:
        raise ValueError("cutoff must be nonnegative")
    verts = list(walk(quotient_set(spec), cutoff, budget.ball))
    if len(verts) > budget.states:
        raise ResourceLimit(f"Γ^{cutoff} has more than {budget.states} vertices", budget=budget.states, argument=cutoff)
    index = {g: i for i, g in enumerate(verts)}  # the walk yields 1 first
    delta = {}
    letters = pair_alphabet(spec.k)
    for i, g in enumerate(verts):
        for x in letters:
            j = index.get(step(spec, g, x))
            if j is not None:
                delta[(i, x)] = j
    gamma = RelationAutomaton(spec, cutoff, certified, verts, delta)
    return trim_gamma(gamma) if trim else gamma


def trim_gamma(gamma: RelationAutomaton) -> RelationAutomaton:
    """Drop states not on a loop through 1; the accepted language is unchanged."""
    fwd: dict = {}
    bwd: dict = {}
    for p, _, q in gamma.edges():
        fwd.setdefault(p, []).append(q)
        bwd.setdefault(q, []).append(p)

    def reach(adj):
        seen = {0}
        todo = [0]
        while todo:
            p = todo.pop()
            for q in adj.get(p, ()):
                if q not in seen:
                    seen.add(q)
                    todo.append(q)
        return seen

    keep = sorted(reach(fwd) & reach(bwd))
    renum = {old: new for new, old in enumerate(keep)}
    delta = {
        (renum[p], x): renum[q] for (p, x), q in gamma.delta.items() if p in renum and q in renum
    }
    return RelationAutomaton(
        gamma.spec, gamma.cutoff, gamma.certified, [gamma.vertices[i] for i in keep], delta, True
    )


def certified_cutoff(spec: SubmonoidSpec, budget: Budget = DEFAULT_BUDGET) -> int:
    """⌈C_wp⌉: above this radius Γ^c accepts the whole word problem."""
    return constants(spec, budget).cutoff


def build_certified(spec: SubmonoidSpec, budget: Budget = DEFAULT_BUDGET, *, trim: bool = False) -> RelationAutomaton:
    return build_gamma(spec, certified_cutoff(spec, budget), budget, trim=trim, certified=True)


def wp_member(gamma: RelationAutomaton, u: Sequence[int], v: Sequence[int]) -> bool:
    """Does some shuffle of (u, v) label a loop at 1?

    Γ is deterministic, so the grid point (i, j) carries at most one state,
    α(u[:i])^-1 α(v[:j]), and the DP only records whether it is reachable.
    """
    left = [PairLetter(LEFT, i) for i in u]
    right = [PairLetter(RIGHT, i) for i in v]
    prev: list = [None] * (len(v) + 1)
    for i in range(len(u) + 1):
        row: list = [None] * (len(v) + 1)
        for j in range(len(v) + 1):
            if i == 0 and j == 0:
                row[0] = gamma.base
                continue
            st = None
            if i > 0 and prev[j] is not None:
                st = gamma.target(prev[j], left[i - 1])
            if st is None and j > 0 and row[j - 1] is not None:
                st = gamma.target(row[j - 1], right[j - 1])
            row[j] = st
        prev = row
    return prev[len(v)] == gamma.base


def wp_exact(spec: SubmonoidSpec, u: Sequence[int], v: Sequence[int]) -> bool:
    """Ground truth: compare the freely reduced products."""
    return spec.evaluate(u) == spec.evaluate(v)


def accepted_pairs(gamma: RelationAutomaton, n: int, budget: int | None = None) -> set[tuple[SWord, SWord]]:
    """π(L(Γ)) with both sides of length <= n."""
    start = ((), ())
    seen = {start: gamma.base}
    todo = deque([start])
    k = gamma.spec.k
    out = set()
    while todo:
        u, v = key = todo.popleft()
        p = seen[key]
        if p == gamma.base:
            out.add(key)
        for i in range(k):
            if len(u) < n:
                q = gamma.target(p, PairLetter(LEFT, i))
                nk = (u + (i,), v)
                if q is not None and nk not in seen:
                    seen[nk] = q
                    todo.append(nk)
            if len(v) < n:
                q = gamma.target(p, PairLetter(RIGHT, i))
                nk = (u, v + (i,))
                if q is not None and nk not in seen:
                    seen[nk] = q
                    todo.append(nk)
        if budget is not None and len(seen) > budget:
            raise ResourceLimit(f"pair enumeration exceeds {budget} states", budget=budget, argument=n)
    return out


def wp_pairs_exact(spec: SubmonoidSpec, n: int) -> set[tuple[SWord, SWord]]:
    """Brute-force word problem relation with both sides of length <= n."""
    classes: dict = {}
    for w in swords(spec.k, n):
        classes.setdefault(spec.evaluate(w), []).append(w)
    return {(u, v) for ws in classes.values() for u in ws for v in ws}
