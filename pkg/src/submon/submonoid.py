"""Finitely generated submonoids of a free group and words over their generators.

An *S-word* is a tuple of generator indices (0-based into
``SubmonoidSpec.generators``).  Its text form lists each generator in
brackets, either spelled as a group word (``[a][b][ABab]``) or by 1-based
index (``[1][2][3]``).
"""

from __future__ import annotations

import json
import re
import warnings
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import IdentityGenerator, ParseError
from .words import Word, as_word, check_rank, format_word, mul

SWord = tuple  # tuple[int, ...] of generator indices


@dataclass(frozen=True)
class SubmonoidSpec:
    """Ambient rank plus an ordered tuple of distinct, nonidentity generators."""

    rank: int
    generators: tuple
    name: str | None = field(default=None, compare=False)
    aliases: tuple = field(default=(), compare=False)  # (label, generator index) pairs

    def __post_init__(self):
        check_rank(self.rank)
        gens = []
        for g in self.generators:
            w = as_word(g, self.rank)
            if not w:
                raise IdentityGenerator("the identity cannot be a generator")
            if w in gens:
                warnings.warn(f"duplicate generator {format_word(w)!r} dropped", stacklevel=3)
                continue
            gens.append(w)
        if not gens:
            raise ParseError("a submonoid spec needs at least one generator")
        object.__setattr__(self, "generators", tuple(gens))
        for label, i in self.aliases:
            if not 0 <= i < len(gens):
                raise ParseError(f"alias {label!r} points at no generator")

    @classmethod
    def from_strings(cls, rank: int, generators: Iterable[str], name=None) -> "SubmonoidSpec":
        return cls(rank, tuple(generators), name)

    @classmethod
    def from_json(cls, data: dict | str, *, strict: bool = False) -> "SubmonoidSpec":
        """Build from the spec-file layout ``{ambient_rank, generators, name?, aliases?}``.

        ``aliases`` maps short labels to generator words so S-words can be
        written as ``[x][y][z]``.

        With ``strict`` the identity and duplicates are rejected instead of
        being dropped with a warning.
        """
        if isinstance(data, str):
            try:
                data = json.loads(data)
            except json.JSONDecodeError as exc:
                raise ParseError(f"invalid JSON: {exc}") from None
        if not isinstance(data, dict):
            raise ParseError("spec file must hold a JSON object")
        try:
            rank = data["ambient_rank"]
            gens = data["generators"]
        except KeyError as exc:
            raise ParseError(f"missing field {exc.args[0]!r}") from None
        if not isinstance(rank, int) or not isinstance(gens, list) or not all(isinstance(g, str) for g in gens):
            raise ParseError("ambient_rank must be an int and generators a list of strings")
        try:
            check_rank(rank)
            words = [as_word(g, rank) for g in gens]
        except ValueError as exc:
            raise ParseError(str(exc)) from None
        if strict:
            if any(not w for w in words):
                raise ParseError("generator list contains the identity")
            if len(set(words)) != len(words):
                raise ParseError("generator list contains duplicates (as group elements)")
        aliases = data.get("aliases", {})
        if not isinstance(aliases, dict) or not all(isinstance(v, str) for v in aliases.values()):
            raise ParseError("aliases must map labels to generator words")
        spec = cls(rank, tuple(gens), data.get("name"))
        pairs = []
        for label, word in aliases.items():
            w = as_word(word, rank)
            if w not in spec.generators:
                raise ParseError(f"alias {label!r} names {word!r}, which is not a generator")
            pairs.append((label, spec.generators.index(w)))
        return cls(rank, spec.generators, spec.name, tuple(pairs))

    def to_json(self) -> dict:
        out = {"ambient_rank": self.rank, "generators": [format_word(g) for g in self.generators]}
        if self.name:
            out["name"] = self.name
        if self.aliases:
            out["aliases"] = {label: format_word(self.generators[i]) for label, i in self.aliases}
        return out

    @property
    def k(self) -> int:
        return len(self.generators)

    @property
    def max_length(self) -> int:
        """The constant L: the longest generator."""
        return max(len(g) for g in self.generators)

    def evaluate(self, sword: Sequence[int]) -> Word:
        """The group element spelled by an S-word."""
        return mul(*(self.generators[i] for i in sword))

    def format_sword(self, sword: Sequence[int]) -> str:
        return "".join(f"[{format_word(self.generators[i])}]" for i in sword) or "[]"

    def parse_sword(self, text: str) -> SWord:
        text = text.strip()
        if text in ("", "[]", "1"):
            return ()
        if not re.fullmatch(r"(\[[^\[\]]*\])+", text):
            raise ParseError(f"S-word must be a sequence of bracketed generators: {text!r}")
        out = []
        for tok in re.findall(r"\[([^\[\]]*)\]", text):
            tok = tok.strip()
            alias = dict(self.aliases).get(tok)
            if alias is not None:
                out.append(alias)
                continue
            if tok.isdigit():
                i = int(tok) - 1
                if not 0 <= i < self.k:
                    raise ParseError(f"generator index {tok} out of range 1..{self.k}")
                out.append(i)
                continue
            w = as_word(tok, self.rank)
            try:
                out.append(self.generators.index(w))
            except ValueError:
                raise ParseError(f"{tok!r} is not a generator") from None
        return tuple(out)

    def __str__(self):
        gens = ", ".join(format_word(g) for g in self.generators)
        return f"<{gens}> in F{self.rank}"


def swords(k: int, max_len: int) -> list[SWord]:
    """All S-words over k generators up to length max_len, shortlex."""
    out: list[SWord] = [()]
    level: list[SWord] = [()]
    for _ in range(max_len):
        level = [w + (i,) for w in level for i in range(k)]
        out.extend(level)
    return out


def order_key(order: Sequence[int] | None):
    """Dictionary-order key on S-words for a total order on generator indices.

    ``order`` lists generator indices from smallest to largest; ``None`` keeps
    the input order.  A proper prefix precedes its extensions.
    """
    if order is None:
        return tuple
    rank = {g: i for i, g in enumerate(order)}
    return lambda w: tuple(rank[i] for i in w)
