from __future__ import annotations

import os
from dataclasses import dataclass, replace

from .errors import ParseError

ENV_VAR = "SUBMON_BUDGET"


@dataclass(frozen=True)
class Budget:
    """Resource ceilings.

    ball: group elements enumerated in one ball or pruned ball walk.
    grammar: nonterminals in one preimage grammar.
    states: states of any automaton built along the way.
    """

    ball: int = 10**6
    grammar: int = 10**5
    states: int = 10**6

    def __post_init__(self):
        for name in ("ball", "grammar", "states"):
            if getattr(self, name) <= 0:
                raise ValueError(f"budget {name} must be positive")

    @classmethod
    def from_env(cls, env=None) -> "Budget":
        """Defaults overridden by ``SUBMON_BUDGET``.

        The variable holds either one integer (applied to every ceiling) or
        comma-separated ``name=value`` pairs, e.g. ``ball=5000,grammar=200``.
        """
        raw = (os.environ if env is None else env).get(ENV_VAR, "").strip()
        if not raw:
            return cls()
        return cls().override(raw)

    def override(self, raw: str) -> "Budget":
        try:
            if "=" not in raw:
                n = int(raw)
                return replace(self, ball=n, grammar=n, states=n)
            fields = {}
            for part in raw.split(","):
                k, v = part.split("=")
                k = k.strip()
                if k not in ("ball", "grammar", "states"):
                    raise ParseError(f"unknown budget {k!r}")
                fields[k] = int(v)
            return replace(self, **fields)
        except ValueError as exc:
            raise ParseError(f"bad budget setting {raw!r}: {exc}") from None


DEFAULT_BUDGET = Budget()
