"""Command-line interface.

Exit codes: 0 yes / success, 1 no, 2 error (bad input, not graded, ...),
3 a resource budget was exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, replace
from pathlib import Path

from .config import Budget
from .decisions import HomSpec, hom_extends, irreducibles, iso
from .errors import ResourceLimit, SubmonError
from .export import dfa_to_dot, dumps, gamma_to_dot, gamma_to_json, ratset_to_dot, ratset_to_json
from .geometry import constants
from .gradedness import factors, is_graded, nontrivial_factorizations
from .normal_forms import description_for, normalize
from .preimage import preimage_grammar
from .rational import elements, monoid
from .relation import build_certified, build_gamma, wp_exact, wp_member
from .submonoid import SubmonoidSpec
from .words import as_word, format_word

EXIT_YES, EXIT_NO, EXIT_ERROR, EXIT_BUDGET = 0, 1, 2, 3


@dataclass(frozen=True)
class RunConfig:
    budget: Budget
    mode: str
    cutoff: int | None
    horizon: int
    fmt: str

    def cutoff_for(self, spec: SubmonoidSpec) -> int:
        """Adaptive default: L + 2."""
        return spec.max_length + 2 if self.cutoff is None else self.cutoff


def load_spec(path: str) -> SubmonoidSpec:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise SubmonError(f"cannot read {path}: {exc.strerror}") from None
    return SubmonoidSpec.from_json(text, strict=True)


def _order(spec: SubmonoidSpec, text: str | None):
    """``--order b<a<ABab``, ``--order z<y<x`` (aliases) or ``--order 2,1,3``:
    least generator first."""
    if not text:
        return None
    parts = [p.strip() for p in text.replace("<", ",").split(",") if p.strip()]
    aliases = dict(spec.aliases)
    out = []
    for p in parts:
        if p.isdigit():
            out.append(int(p) - 1)
        elif p in aliases:
            out.append(aliases[p])
        else:
            w = as_word(p, spec.rank)
            if w not in spec.generators:
                raise SubmonError(f"{p!r} is not a generator")
            out.append(spec.generators.index(w))
    if sorted(out) != list(range(spec.k)):
        raise SubmonError(f"--order must list each of the {spec.k} generators once")
    return tuple(out)


def _emit(cfg: RunConfig, payload: dict, text: str):
    if cfg.fmt == "json":
        print(dumps(payload))
    else:
        print(text)


def _mode_line(cfg: RunConfig, spec, certified_cutoff=None) -> str:
    if cfg.mode == "certified":
        return f"mode: certified (cutoff {certified_cutoff})"
    return f"mode: adaptive (cutoff {cfg.cutoff_for(spec)}, horizon {cfg.horizon})"


def _gamma(spec, cfg, trim=False):
    if cfg.mode == "certified":
        return build_certified(spec, cfg.budget, trim=trim)
    return build_gamma(spec, cfg.cutoff_for(spec), cfg.budget, trim=trim)


# -- commands ------------------------------------------------------------------


def cmd_graded(args, cfg):
    spec = load_spec(args.spec)
    v = is_graded(spec, cfg.budget)
    text = f"graded: {'yes' if v.graded else 'no'} (cutoff {v.cutoff_used})"
    if v.witness is not None:
        text += f"\nwitness: {format_word(v.witness) or '1'} has infinitely many spellings"
    _emit(cfg, v.to_json(), text)
    return EXIT_YES if v.graded else EXIT_NO


def cmd_constants(args, cfg):
    spec = load_spec(args.spec)
    c = constants(spec, cfg.budget, include_cutoff=not args.skip_cutoff)
    rec = c.to_json()
    lines = [f"{k}: {_fmt_value(v)}" for k, v in rec.items()]
    _emit(cfg, rec, "\n".join(lines))
    return EXIT_YES


def _fmt_value(v):
    if isinstance(v, dict):
        return f"{v['num']}/{v['den']}" if v["den"] != 1 else str(v["num"])
    return "-" if v is None else str(v)


def cmd_automaton(args, cfg):
    spec = load_spec(args.spec)
    if args.kind == "monoid":
        r = monoid(spec)
        if cfg.fmt == "dot":
            print(ratset_to_dot(r, spec.name or "monoid"), end="")
        elif cfg.fmt == "json":
            print(dumps(ratset_to_json(r)))
        else:
            print(f"Benois automaton of M: {r.states} states, {len(r.transitions())} edges")
            print("members up to length 3:", ", ".join(format_word(w) or "1" for w in elements(r, 3)))
        return EXIT_YES
    if args.kind == "normal-forms":
        d = description_for(spec, _order(spec, args.order), None if cfg.mode == "certified" else cfg.cutoff_for(spec), cfg.budget)
        if cfg.fmt == "dot":
            print(dfa_to_dot(d.B, spec, "normal_forms"), end="")
        else:
            words = [spec.format_sword(w) for w in d.B.words(3)]
            payload = {"states": d.B.n, "certified": d.certified, "cutoff": d.gamma.cutoff, "words_up_to_3": words}
            _emit(cfg, payload, f"normal-form DFA: {d.B.n} states; {_mode_line(cfg, spec, d.gamma.cutoff)}\n"
                  + "normal forms up to length 3: " + " ".join(words))
        return EXIT_YES
    g = _gamma(spec, cfg, trim=args.trim)
    if cfg.fmt == "dot":
        print(gamma_to_dot(g, spec.name or "gamma"), end="")
    elif cfg.fmt == "json":
        print(dumps(gamma_to_json(g)))
    else:
        s = g.summary()
        print(f"relation automaton: {s['vertices']} vertices, {s['edges']} edges, trimmed={s['trimmed']}")
        print(f"certified: {str(g.certified).lower()}")
        print(_mode_line(cfg, spec, g.cutoff))
    return EXIT_YES


def cmd_wp(args, cfg):
    spec = load_spec(args.spec)
    u, v = spec.parse_sword(args.u), spec.parse_sword(args.v)
    g = _gamma(spec, cfg)
    ans = wp_member(g, u, v)
    payload = {"member": ans, "certified": g.certified, "cutoff": g.cutoff}
    text = f"{str(ans).lower()}\ncertified: {str(g.certified).lower()}\n{_mode_line(cfg, spec, g.cutoff)}"
    if not ans and not g.certified:
        text += "\n(false at this cutoff; exact answer: " + str(wp_exact(spec, u, v)).lower() + ")"
        payload["exact"] = wp_exact(spec, u, v)
    _emit(cfg, payload, text)
    return EXIT_YES if ans else EXIT_NO


def cmd_normalize(args, cfg):
    spec = load_spec(args.spec)
    u = spec.parse_sword(args.word)
    order = _order(spec, args.order)
    cutoff = None if cfg.mode == "certified" else cfg.cutoff_for(spec)
    nf = normalize(spec, u, args.engine, order, cutoff, cfg.budget)
    elem = format_word(spec.evaluate(nf)) or "1"
    payload = {"normal_form": spec.format_sword(nf), "element": elem, "engine": args.engine, "certified": cutoff is None}
    if args.engine == "transducer":
        payload["cutoff"] = cutoff
    text = f"{spec.format_sword(nf)}\nelement: {elem}\nengine: {args.engine}"
    if args.engine == "transducer":
        text += "\n" + _mode_line(cfg, spec, cutoff)
    _emit(cfg, payload, text)
    return EXIT_YES


def cmd_irreducibles(args, cfg):
    spec = load_spec(args.spec)
    irr = [format_word(w) for w in irreducibles(spec, cfg.budget)]
    _emit(cfg, {"irreducibles": irr}, " ".join(irr))
    return EXIT_YES


def cmd_factorizations(args, cfg):
    spec = load_spec(args.spec)
    g = as_word(args.element, spec.rank)
    if cfg.fmt == "grammar":
        gr = preimage_grammar(spec, g, cfg.budget)
        print(gr.dump())
        print("# " + json.dumps(gr.summary(), sort_keys=True, ensure_ascii=False))
        return EXIT_YES
    ws = nontrivial_factorizations(spec, g, args.max_len, cfg.budget)
    out = [spec.format_sword(w) for w in ws]
    _emit(cfg, {"element": format_word(g), "max_len": args.max_len, "factorizations": out}, "\n".join(out))
    return EXIT_YES if ws else EXIT_NO


def cmd_factors(args, cfg):
    spec = load_spec(args.spec)
    r, finite = factors(spec, args.element, cfg.budget)
    listed = [format_word(w) or "1" for w in elements(r, args.max_len, cfg.budget.ball)]
    if cfg.fmt == "dot":
        print(ratset_to_dot(r, "factors"), end="")
        return EXIT_YES
    _emit(cfg, {"finite": finite, "max_len": args.max_len, "factors": listed},
          f"finite: {str(finite).lower()}\nfactors up to length {args.max_len}: " + " ".join(listed))
    return EXIT_YES


def _parse_maps(items):
    out = {}
    for item in items or ():
        if "=" not in item:
            raise SubmonError(f"--map expects gen=word, got {item!r}")
        k, v = item.split("=", 1)
        out[k.strip()] = v.strip()
    return out


def cmd_hom(args, cfg):
    spec = load_spec(args.spec)
    rank = args.target_rank or spec.rank
    h = HomSpec.from_mapping(spec, rank, _parse_maps(args.map))
    v = hom_extends(h, cfg.mode, cfg.cutoff_for(spec), cfg.horizon, cfg.budget)
    text = f"extends: {v.outcome}"
    if v.witness:
        u, w = v.witness
        text += (f"\nwitness: {spec.format_sword(u)} = {spec.format_sword(w)} in M,"
                 f" images {format_word(h.image(u)) or '1'} vs {format_word(h.image(w)) or '1'}")
    text += f"\ncertified: {str(v.certified).lower()}\n{_mode_line(cfg, spec, v.cutoff)}"
    _emit(cfg, v.to_json(spec), text)
    return EXIT_YES if v.extends else EXIT_NO


def cmd_iso(args, cfg):
    s1, s2 = load_spec(args.spec1), load_spec(args.spec2)
    cutoff = None if cfg.mode == "certified" else max(cfg.cutoff_for(s1), cfg.cutoff_for(s2))
    v = iso(s1, s2, cfg.mode, cutoff, cfg.horizon, cfg.budget)
    text = f"isomorphic: {v.outcome}"
    if v.bijection:
        text += "\nbijection: " + ", ".join(f"{format_word(x)}->{format_word(y)}" for x, y in v.bijection)
    if v.reason:
        text += f"\nreason: {v.reason}"
    text += f"\ncertified: {str(v.certified).lower()}"
    if cfg.mode == "adaptive":
        text += f"\nmode: adaptive (cutoff {cutoff}, horizon {cfg.horizon})"
    _emit(cfg, v.to_json(), text)
    return EXIT_YES if v.isomorphic else EXIT_NO


# -- wiring -----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--mode", choices=["adaptive", "certified"], default="adaptive")
    common.add_argument("--cutoff", type=int, help="radius of the relation automaton (adaptive; default L+2)")
    common.add_argument("--horizon", type=int, default=4, help="relation length checked in adaptive mode")
    common.add_argument("--format", dest="fmt", choices=["text", "json", "dot", "grammar"], default="text")
    common.add_argument("--budget-ball", type=int)
    common.add_argument("--budget-grammar", type=int)
    common.add_argument("--budget-states", type=int)

    p = argparse.ArgumentParser(prog="submon", description="Decision procedures for submonoids of free groups.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help):
        sp = sub.add_parser(name, parents=[common], help=help)
        sp.set_defaults(func=fn)
        return sp

    sp = add("graded", cmd_graded, "decide gradedness")
    sp.add_argument("spec")
    sp = add("constants", cmd_constants, "quasi-geodesic and cutoff constants")
    sp.add_argument("spec")
    sp.add_argument("--skip-cutoff", action="store_true", help="do not evaluate C_wp")
    sp = add("automaton", cmd_automaton, "build and export an automaton")
    sp.add_argument("spec")
    sp.add_argument("--kind", choices=["gamma", "monoid", "normal-forms"], default="gamma")
    sp.add_argument("--trim", action="store_true")
    sp.add_argument("--order")
    sp = add("wp", cmd_wp, "word problem: do two S-words spell the same element?")
    sp.add_argument("spec")
    sp.add_argument("u")
    sp.add_argument("v")
    sp = add("normalize", cmd_normalize, "lexicographic normal form of an S-word")
    sp.add_argument("spec")
    sp.add_argument("word")
    sp.add_argument("--order", help="generator order, least first: 'b<a<ABab' or '2,1,3'")
    sp.add_argument("--engine", choices=["transducer", "oracle"], default="transducer")
    sp = add("irreducibles", cmd_irreducibles, "irreducible generators")
    sp.add_argument("spec")
    sp = add("factorizations", cmd_factorizations, "S-words spelling a group element")
    sp.add_argument("spec")
    sp.add_argument("element")
    sp.add_argument("--max-len", type=int, default=6)
    sp = add("factors", cmd_factors, "factors of an element of M")
    sp.add_argument("spec")
    sp.add_argument("element")
    sp.add_argument("--max-len", type=int, default=6)
    sp = add("hom", cmd_hom, "does a generator map extend to a homomorphism?")
    sp.add_argument("spec")
    sp.add_argument("--map", action="append", help="gen=word (repeatable)")
    sp.add_argument("--target-rank", type=int)
    sp = add("iso", cmd_iso, "are two graded monoids isomorphic?")
    sp.add_argument("spec1")
    sp.add_argument("spec2")
    return p


def _config(args) -> RunConfig:
    budget = Budget.from_env()
    over = {k: getattr(args, f"budget_{k}") for k in ("ball", "grammar", "states")}
    budget = replace(budget, **{k: v for k, v in over.items() if v is not None})
    if args.horizon < 0 or (args.cutoff is not None and args.cutoff < 0):
        raise SubmonError("cutoff and horizon must be nonnegative")
    return RunConfig(budget, args.mode, args.cutoff, args.horizon, args.fmt)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _config(args)
        return args.func(args, cfg)
    except ResourceLimit as exc:
        extra = f" (argument {exc.argument})" if exc.argument is not None else ""
        print(f"resource limit: {exc}{extra}", file=sys.stderr)
        return EXIT_BUDGET
    except (SubmonError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
