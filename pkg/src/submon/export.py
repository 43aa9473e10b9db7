"""DOT and JSON renderings of the automata built by the package."""

from __future__ import annotations

import json

from .automata import EPS, Dfa, Nfa
from .rational import GroupNfa, RatSetAutomaton
from .relation import RelationAutomaton
from .submonoid import SubmonoidSpec
from .words import format_word, letter_char


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _dot(name: str, n: int, initial, finals, edges, state_label=str) -> str:
    lines = [f"digraph {_quote(name)} {{", "  rankdir=LR;", '  node [shape=circle];', '  __start [shape=point];']
    for q in range(n):
        shape = "doublecircle" if q in finals else "circle"
        lines.append(f"  q{q} [shape={shape}, label={_quote(state_label(q))}];")
    for q in sorted(initial):
        lines.append(f"  __start -> q{q};")
    for p, lab, q in sorted(edges, key=lambda e: (e[0], e[2], e[1])):
        lines.append(f"  q{p} -> q{q} [label={_quote(lab)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _letter(a) -> str:
    return "ε" if a is EPS else letter_char(a)


def nfa_to_dot(m: Nfa, name="nfa", symbol=str) -> str:
    edges = [(p, "ε" if a is EPS else symbol(a), q) for p, a, q in m.edges()]
    return _dot(name, m.n, m.initial, m.finals, edges)


def ratset_to_dot(r: RatSetAutomaton | GroupNfa, name="ratset") -> str:
    return nfa_to_dot(r.nfa, name, _letter)


def dfa_to_dot(d: Dfa, spec: SubmonoidSpec | None = None, name="dfa") -> str:
    def sym(i):
        return f"[{format_word(spec.generators[i])}]" if spec else str(i + 1)

    edges = [(q, sym(a), t) for q in range(d.n) for a, t in d.delta[q].items()]
    return _dot(name, d.n, {d.start}, d.finals, edges)


def gamma_to_dot(g: RelationAutomaton, name="gamma") -> str:
    edges = [(p, x.format(g.spec), q) for p, x, q in g.edges()]
    return _dot(name, g.num_vertices, {0}, {0}, edges, lambda q: format_word(g.vertices[q]) or "1")


def gamma_to_json(g: RelationAutomaton) -> dict:
    return {
        **g.summary(),
        "spec": g.spec.to_json(),
        "states": [format_word(v) for v in g.vertices],
        "edges": sorted(
            [[p, x.format(g.spec), q] for p, x, q in g.edges()],
            key=lambda e: (e[0], e[1], e[2]),
        ),
    }


def ratset_to_json(r: RatSetAutomaton) -> dict:
    m = r.nfa
    return {
        "rank": r.rank,
        "states": m.n,
        "initial": sorted(m.initial),
        "final": sorted(m.finals),
        "edges": [[p, _letter(a), q] for p, a, q in r.transitions()],
    }


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False)


def is_valid_dot(text: str) -> bool:
    """Minimal structural check: one digraph block, balanced braces and
    quotes, and every statement is a node, an edge or an attribute."""
    body = text.strip()
    if not body.startswith("digraph ") or not body.endswith("}"):
        return False
    depth = 0
    in_quote = False
    escaped = False
    for ch in body:
        if in_quote:
            if escaped:
                escaped = False
            elif ch == "\\":
                escaped = True
            elif ch == '"':
                in_quote = False
            continue
        if ch == '"':
            in_quote = True
        elif ch == "{":
            depth += 1
        elif ch == "}":
            depth -= 1
            if depth < 0:
                return False
    if depth != 0 or in_quote:
        return False
    inner = body[body.index("{") + 1 : body.rindex("}")]
    for line in inner.strip().splitlines():
        line = line.strip()
        if not line:
            continue
        if not line.endswith(";"):
            return False
    return True
