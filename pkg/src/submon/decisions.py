"""Irreducibles, homomorphism extension and isomorphism of graded submonoids.

A map φ: S -> F extends to a homomorphism M -> F exactly when every
relation (u, v) of M maps into the diagonal, i.e. φ(u) = φ(v).  The
relations are the projections of the language of Γ, so the question
becomes whether a finite automaton labelled by pairs of group words only
accepts words whose two sides agree, which a spanning tree settles.
"""

from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass
from typing import Callable, Hashable, Mapping, Sequence

from .automata import Nfa
from .config import DEFAULT_BUDGET, Budget
from .errors import NotGraded, NotTrim, ResourceLimit
from .gradedness import is_graded
from .relation import LEFT, RelationAutomaton, build_certified, build_gamma, project, wp_exact, wp_pairs_exact
from .rational import concat, member, monoid_nonidentity
from .submonoid import SubmonoidSpec, SWord
from .words import Word, as_word, format_word, inv, mul

DEFAULT_CUTOFF = 6
DEFAULT_HORIZON = 4
MAX_BIJECTIONS = math.factorial(8)


def irreducibles(spec: SubmonoidSpec, budget: Budget = DEFAULT_BUDGET) -> tuple[Word, ...]:
    """Generators not in (M minus 1)^2, in spec order."""
    n = monoid_nonidentity(spec)
    nn = concat(n, n, budget)
    return tuple(s for s in spec.generators if not member(s, nn))


# -- diagonal test ------------------------------------------------------------


@dataclass(frozen=True)
class DiagonalResult:
    ok: bool
    witness: tuple | None = None  # an accepted word whose two sides differ

    def __bool__(self):
        return self.ok


def subset_of_diagonal(nfa: Nfa, labels: Callable[[Hashable], tuple[Word, Word]]) -> DiagonalResult:
    """Does every accepted word w satisfy β₁(w) = β₂(w)?

    ``labels`` sends a symbol x to the pair (β₁(x), β₂(x)) of reduced words.
    A shortlex BFS tree labels each state by β₁(u)^-1 β₂(u) for its tree
    word u; the relation is diagonal iff terminal labels are 1 and every
    edge is consistent with the labels.  A failing check yields an accepted
    word that is off the diagonal.
    """
    if len(nfa.initial) != 1:
        raise NotTrim("the diagonal test needs exactly one initial state")
    if not nfa.is_trim():
        raise NotTrim("the diagonal test needs a trim automaton")
    (root,) = nfa.initial
    syms = sorted(nfa.alphabet, key=repr)
    tree_word: dict = {root: ()}
    label: dict = {root: ()}
    todo = deque([root])
    while todo:
        p = todo.popleft()
        for x in syms:
            for q in sorted(nfa.delta[p].get(x, ())):
                if q not in label:
                    b1, b2 = labels(x)
                    label[q] = mul(inv(b1), label[p], b2)
                    tree_word[q] = tree_word[p] + (x,)
                    todo.append(q)
    to_final = _paths_to_final(nfa, syms)
    for q in sorted(nfa.finals):
        if label[q] != ():
            return DiagonalResult(False, tree_word[q])
    for p in range(nfa.n):
        for x in syms:
            for q in nfa.delta[p].get(x, ()):
                b1, b2 = labels(x)
                if label[q] != mul(inv(b1), label[p], b2):
                    # one of these two accepted words leaves the diagonal
                    w1 = tree_word[p] + (x,) + to_final[q]
                    w2 = tree_word[q] + to_final[q]
                    return DiagonalResult(False, w1 if _off(w1, labels) else w2)
    return DiagonalResult(True)


def _off(word, labels) -> bool:
    left = mul(*(labels(x)[0] for x in word))
    right = mul(*(labels(x)[1] for x in word))
    return left != right


def _paths_to_final(nfa: Nfa, syms) -> dict:
    back: dict = {}
    for p, x, q in nfa.edges():
        back.setdefault(q, []).append((x, p))
    out = {f: () for f in nfa.finals}
    todo = deque(sorted(nfa.finals))
    while todo:
        q = todo.popleft()
        for x, p in back.get(q, ()):
            if p not in out:
                out[p] = (x,) + out[q]
                todo.append(p)
    return out


# -- homomorphisms --------------------------------------------------------------


@dataclass(frozen=True)
class HomSpec:
    source: SubmonoidSpec
    target_rank: int
    images: tuple  # one reduced word per source generator

    def __post_init__(self):
        imgs = tuple(as_word(w, self.target_rank) for w in self.images)
        if len(imgs) != self.source.k:
            raise ValueError(f"need {self.source.k} images, got {len(imgs)}")
        object.__setattr__(self, "images", imgs)

    @classmethod
    def from_mapping(cls, source: SubmonoidSpec, target_rank: int, mapping: Mapping) -> "HomSpec":
        """``mapping`` keys are generator words, aliases, or 1-based generator indices."""
        images: list = [None] * source.k
        aliases = dict(source.aliases)
        for key, img in mapping.items():
            if isinstance(key, int):
                i = key - 1
            else:
                key = key.strip()
                if key.isdigit():
                    i = int(key) - 1
                elif key in aliases:
                    i = aliases[key]
                else:
                    w = as_word(key, source.rank)
                    if w not in source.generators:
                        raise ValueError(f"{key!r} is not a generator")
                    i = source.generators.index(w)
            if not 0 <= i < source.k:
                raise ValueError(f"no generator {key!r}")
            images[i] = img
        missing = [format_word(source.generators[i]) for i, v in enumerate(images) if v is None]
        if missing:
            raise ValueError(f"no image given for {', '.join(missing)}")
        return cls(source, target_rank, tuple(images))

    def image(self, sword: Sequence[int]) -> Word:
        return mul(*(self.images[i] for i in sword))


@dataclass(frozen=True)
class HomVerdict:
    outcome: str  # "yes" (certified), "yes-up-to" or "no"
    witness: tuple[SWord, SWord] | None = None
    horizon: int | None = None
    cutoff: int | None = None

    @property
    def extends(self) -> bool:
        return self.outcome != "no"

    @property
    def certified(self) -> bool:
        return self.outcome != "yes-up-to"

    def to_json(self, spec: SubmonoidSpec | None = None) -> dict:
        out = {"outcome": self.outcome, "certified": self.certified, "cutoff": self.cutoff}
        if self.horizon is not None:
            out["horizon"] = self.horizon
        if self.witness is not None:
            fmt = spec.format_sword if spec else list
            out["witness"] = [fmt(self.witness[0]), fmt(self.witness[1])]
        return out


def _gamma_labels(h: HomSpec):
    def labels(x):
        img = h.images[x.gen]
        return (img, ()) if x.side == LEFT else ((), img)

    return labels


def _require_graded(spec, budget):
    verdict = is_graded(spec, budget)
    if not verdict.graded:
        raise NotGraded(f"{spec} is not graded", witness=verdict.witness)


def _relation_automaton(spec, mode, cutoff, budget) -> RelationAutomaton:
    if mode == "certified":
        return build_certified(spec, budget, trim=True)
    if mode != "adaptive":
        raise ValueError(f"unknown mode {mode!r}")
    return build_gamma(spec, DEFAULT_CUTOFF if cutoff is None else cutoff, budget, trim=True)


def hom_extends(
    h: HomSpec,
    mode: str = "adaptive",
    cutoff: int | None = None,
    horizon: int = DEFAULT_HORIZON,
    budget: Budget = DEFAULT_BUDGET,
) -> HomVerdict:
    """Decide whether φ extends to M.

    ``certified`` uses Γ at the certified cutoff and answers yes/no.  In
    ``adaptive`` mode a no is still a proof (Γ^c only accepts relations),
    but a yes is downgraded to yes-up-to after checking every relation with
    both sides of length <= horizon.
    """
    spec = h.source
    _require_graded(spec, budget)
    gamma = _relation_automaton(spec, mode, cutoff, budget)
    res = subset_of_diagonal(gamma.to_nfa(), _gamma_labels(h))
    if not res:
        u, v = project(res.witness)
        assert wp_exact(spec, u, v) and h.image(u) != h.image(v)
        return HomVerdict("no", (u, v), cutoff=gamma.cutoff)
    if gamma.certified:
        return HomVerdict("yes", cutoff=gamma.cutoff)
    for u, v in sorted(wp_pairs_exact(spec, horizon), key=lambda p: (len(p[0]) + len(p[1]), p)):
        if h.image(u) != h.image(v):
            return HomVerdict("no", (u, v), cutoff=gamma.cutoff)
    return HomVerdict("yes-up-to", horizon=horizon, cutoff=gamma.cutoff)


# -- isomorphism -----------------------------------------------------------------


@dataclass(frozen=True)
class IsoVerdict:
    outcome: str  # "yes", "yes-up-to" or "no"
    bijection: tuple | None = None  # pairs (irreducible of M1, irreducible of M2)
    reason: str = ""

    @property
    def isomorphic(self) -> bool:
        return self.outcome != "no"

    @property
    def certified(self) -> bool:
        return self.outcome != "yes-up-to"

    def to_json(self) -> dict:
        out = {"outcome": self.outcome, "certified": self.certified}
        if self.bijection is not None:
            out["bijection"] = {format_word(x): format_word(y) for x, y in self.bijection}
        if self.reason:
            out["reason"] = self.reason
        return out


def _shift(w: Word, by: int) -> Word:
    return tuple(x + by if x > 0 else x - by for x in w)


def iso(
    spec1: SubmonoidSpec,
    spec2: SubmonoidSpec,
    mode: str = "adaptive",
    cutoff: int | None = None,
    horizon: int = DEFAULT_HORIZON,
    budget: Budget = DEFAULT_BUDGET,
) -> IsoVerdict:
    """Decide M1 ≅ M2 for graded monoids.

    An isomorphism must biject the irreducibles, which generate each graded
    monoid.  Both monoids are placed in F(rank1 + rank2) on disjoint
    letters, and each bijection is tested as a homomorphism in both
    directions.
    """
    _require_graded(spec1, budget)
    _require_graded(spec2, budget)
    X = irreducibles(spec1, budget)
    Y = irreducibles(spec2, budget)
    if len(X) != len(Y):
        return IsoVerdict("no", reason=f"{len(X)} vs {len(Y)} irreducibles")
    if math.factorial(len(X)) > MAX_BIJECTIONS:
        raise ResourceLimit(f"{len(X)}! bijections to test", budget=MAX_BIJECTIONS, argument=len(X))
    r1 = spec1.rank
    rank = r1 + spec2.rank
    A = SubmonoidSpec(rank, X)
    Y_shifted = tuple(_shift(y, r1) for y in Y)
    B = SubmonoidSpec(rank, Y_shifted)
    # candidates whose generator lengths match best come first
    perms = sorted(
        itertools.permutations(range(len(Y))),
        key=lambda p: (sum(abs(len(X[i]) - len(Y[j])) for i, j in enumerate(p)), p),
    )
    for p in perms:
        fwd = hom_extends(HomSpec(A, rank, tuple(Y_shifted[j] for j in p)), mode, cutoff, horizon, budget)
        if not fwd.extends:
            continue
        back_images = [None] * len(X)
        for i, j in enumerate(p):
            back_images[j] = X[i]
        bwd = hom_extends(HomSpec(B, rank, tuple(back_images)), mode, cutoff, horizon, budget)
        if not bwd.extends:
            continue
        pairs = tuple((X[i], Y[j]) for i, j in enumerate(p))
        return IsoVerdict("yes" if fwd.certified and bwd.certified else "yes-up-to", pairs)
    return IsoVerdict("no", reason="no bijection of irreducibles extends both ways")
