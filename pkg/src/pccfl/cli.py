"""Command-line front end.

Every subcommand is a thin adapter over a library call.  Exit codes:
0 for a positive answer or success, 1 for a negative answer, 2 for usage
or parse errors, 3 when a search budget runs out.  ``--json`` switches the
output to the documented JSON shapes (see README).

Wherever a grammar, automaton or PA grammar file is expected,
``gallery:NAME`` (or ``builtin:NAME``) selects a built-in entry instead.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from . import acceptance
from .closures import concat, hom_image, shuffle, substitute_letters, union
from .engine import DEFAULT_BUDGET, ProductionStep, derive_witness, enumerate_words, member, replay
from .errors import BudgetExhausted, NotTransitiveError, PccflError
from .gallery import GalleryEntry, gallery_get, gallery_list
from .grammar import Grammar, format_pcg, parse_pcg, threads, validate
from .mpda import Mpda, accepts, enumerate_mpda, format_mpda, from_transitive_grammar, parse_mpda
from .pa import PaGrammar, pa_enumerate, pa_member, parse_pag, validate_pa
from .pumping import MODES, find_decomposition
from .trace_closure import (DEFAULT_CLASS_CAP, closure_member, letter_independence,
                            read_letter_independence, trace_class)
from .trees import certificate_from_json, certificate_to_json, tree_from_derivation, verify_certificate
from .words import as_word, format_word, sort_words

OK, NEGATIVE, USAGE, BUDGET = 0, 1, 2, 3


@dataclass
class CommandResult:
    code: int
    text: str
    data: object = None
    json_requested: bool = False

    def render(self, as_json: bool) -> str:
        if as_json and self.data is not None:
            return json.dumps(self.data, indent=2, sort_keys=True, ensure_ascii=False)
        return self.text


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage().strip()}\n{self.prog}: error: {message}")


class _Subparsers:
    """Adds the shared ``--json`` flag to every subcommand."""

    def __init__(self, action, common):
        self.action, self.common = action, common

    def add_parser(self, name, **kw):
        return self.action.add_parser(name, parents=[self.common], **kw)


# --- sources -------------------------------------------------------------------


@dataclass
class Source:
    """A loaded language presentation."""
    kind: str  # grammar, mpda, pa-grammar, cfg+letter-independence, predicate
    payload: object
    letter_independence: object = None
    entry: GalleryEntry | None = None


def load_source(ref: str) -> Source:
    for prefix in ("gallery:", "builtin:"):
        if ref.startswith(prefix):
            e = gallery_get(ref[len(prefix):])
            return Source(e.kind, e.payload, e.letter_independence, e)
    text = Path(ref).read_text(encoding="utf-8")
    suffix = Path(ref).suffix.lower()
    if suffix == ".mpda":
        return Source("mpda", parse_mpda(text))
    if suffix == ".pag":
        return Source("pa-grammar", parse_pag(text))
    g = parse_pcg(text)
    indep = read_letter_independence(text)
    return Source("cfg+letter-independence" if indep is not None else "grammar", g, indep)


def _grammar(ref: str) -> Grammar:
    src = load_source(ref)
    if not isinstance(src.payload, Grammar):
        raise UsageError(f"{ref} is not a grammar")
    return src.payload


def _word(parts, alphabet=None) -> tuple[str, ...]:
    return as_word(" ".join(parts) if len(parts) > 1 else parts[0], alphabet)


def _words_json(words) -> list[str]:
    return [format_word(w) for w in words]


def _verdict(flag: bool, data: dict) -> CommandResult:
    return CommandResult(OK if flag else NEGATIVE, "true" if flag else "false", data)


def _listing(words) -> CommandResult:
    words = _words_json(words)
    return CommandResult(OK, "\n".join(words), words)


# --- commands ------------------------------------------------------------------


def cmd_validate(a) -> CommandResult:
    src = load_source(a.file)
    if src.kind == "pa-grammar":
        problems = validate_pa(src.payload)
        return CommandResult(NEGATIVE if problems else OK, "\n".join(problems) or "valid",
                             {"valid": not problems, "diagnostics": problems})
    if src.kind == "mpda":
        return CommandResult(OK, "valid", {"valid": True, "diagnostics": []})
    if src.kind == "predicate":
        raise UsageError(f"{a.file} is a predicate, not a grammar")
    g = src.payload
    diags = [str(d) for d in validate(g)]
    data = {"valid": not diags, "diagnostics": diags, "threads": None, "witness": None}
    lines = diags or ["valid"]
    try:
        blocks = threads(g)
        data["threads"] = [sorted(b) for b in blocks]
        lines.append("threads: " + " ".join("{" + " ".join(sorted(b)) + "}" for b in blocks))
    except NotTransitiveError as exc:
        data["witness"] = list(exc.witness)
        lines.append(f"not transitive: witness {' '.join(exc.witness)}")
    return CommandResult(NEGATIVE if diags else OK, "\n".join(lines), data)


def _member(src: Source, word, budget: int) -> bool:
    if src.kind == "grammar":
        return member(src.payload, word, budget)
    if src.kind == "mpda":
        return accepts(src.payload, word, budget)
    if src.kind == "pa-grammar":
        return pa_member(src.payload, word, budget)
    if src.kind == "cfg+letter-independence":
        return closure_member(src.payload, src.letter_independence, word, cap=max(len(word), 1), budget=budget)
    return src.entry.oracle()(word)


def _alphabet(src: Source):
    return src.entry.alphabet if src.kind == "predicate" else src.payload.alphabet


def cmd_member(a) -> CommandResult:
    src = load_source(a.file)
    w = _word(a.word, _alphabet(src))
    hit = _member(src, w, a.budget)
    return _verdict(hit, {"word": format_word(w), "member": hit})


def cmd_enumerate(a) -> CommandResult:
    src = load_source(a.file)
    if src.kind in ("grammar", "cfg+letter-independence"):
        words = enumerate_words(src.payload, a.max_len, a.budget)
        if src.kind == "cfg+letter-independence":
            closure = set()
            for w in words:
                closure |= trace_class(w, src.letter_independence, cap=a.max_len)
            words = sort_words(closure)
    elif src.kind == "mpda":
        words = enumerate_mpda(src.payload, a.max_len, a.budget)
    elif src.kind == "pa-grammar":
        words = pa_enumerate(src.payload, a.max_len, a.budget)
    else:
        raise UsageError("predicates cannot be enumerated")
    return _listing(words)


def _derivation_json(g: Grammar, d) -> list[dict]:
    out = []
    for s in d.steps:
        if isinstance(s, ProductionStep):
            out.append({"kind": "production", "production": g.production_index(s.production),
                        "text": str(s.production)})
        else:
            out.append({"kind": "swap", "index": s.index})
    return out


def cmd_witness(a) -> CommandResult:
    g = _grammar(a.file)
    w = _word(a.word, g.alphabet)
    d = derive_witness(g, w, a.budget)
    if d is None:
        return _verdict(False, {"word": format_word(w), "member": False})
    cert = tree_from_derivation(g, d)
    cert_text = certificate_to_json(g, cert)
    if a.out:
        Path(a.out).write_text(cert_text, encoding="utf-8")
    configs = replay(g, d)
    lines = [" ".join(c) or "eps" for c in configs]
    lines.append(f"{d.production_steps} production steps, {d.swap_steps} swaps")
    if not a.out:
        lines.append(cert_text.rstrip())
    data = {"word": format_word(w), "member": True, "derivation": _derivation_json(g, d),
            "production_steps": d.production_steps, "swap_steps": d.swap_steps,
            "certificate": json.loads(cert_text)}
    return CommandResult(OK, "\n".join(lines), data)


def cmd_verify_cert(a) -> CommandResult:
    g = _grammar(a.file)
    w = _word(a.word, g.alphabet)
    cert = certificate_from_json(g, Path(a.certificate).read_text(encoding="utf-8"))
    ok = verify_certificate(g, w, cert)
    return _verdict(ok, {"word": format_word(w), "valid": ok})


def _emit_grammar(g: Grammar, out) -> CommandResult:
    text = format_pcg(g)
    if out:
        Path(out).write_text(text, encoding="utf-8")
    return CommandResult(OK, text.rstrip(), {"grammar": text})


def cmd_binary(a) -> CommandResult:
    op = {"union": union, "shuffle": shuffle, "concat": concat}[a.command]
    return _emit_grammar(op(_grammar(a.left), _grammar(a.right)), a.out)


def _mapping(items) -> dict:
    out = {}
    for item in items:
        key, sep, value = item.partition("=")
        if not sep or not key:
            raise UsageError(f"expected LETTER=VALUE, got {item!r}")
        out[key] = value
    return out


def cmd_subst(a) -> CommandResult:
    images = {k: _grammar(v) for k, v in _mapping(a.map).items()}
    return _emit_grammar(substitute_letters(_grammar(a.file), images), a.out)


def cmd_hom(a) -> CommandResult:
    h = {k: as_word(v) for k, v in _mapping(a.map).items()}
    return _emit_grammar(hom_image(_grammar(a.file), h), a.out)


def cmd_to_mpda(a) -> CommandResult:
    g = _grammar(a.file)
    try:
        m = from_transitive_grammar(g)
    except NotTransitiveError as exc:
        return CommandResult(NEGATIVE, str(exc), {"transitive": False, "witness": list(exc.witness)})
    text = format_mpda(m)
    if a.out:
        Path(a.out).write_text(text, encoding="utf-8")
    return CommandResult(OK, text.rstrip(), {"transitive": True, "mpda": text})


def _mpda(ref) -> Mpda:
    src = load_source(ref)
    if src.kind == "mpda":
        return src.payload
    if src.kind == "grammar":
        return from_transitive_grammar(src.payload)
    raise UsageError(f"{ref} is not an automaton")


def cmd_mpda_run(a) -> CommandResult:
    m = _mpda(a.file)
    w = _word(a.word, m.alphabet)
    hit = accepts(m, w, a.budget)
    return _verdict(hit, {"word": format_word(w), "member": hit})


def cmd_mpda_enum(a) -> CommandResult:
    return _listing(enumerate_mpda(_mpda(a.file), a.max_len, a.budget))


def _pa(ref) -> PaGrammar:
    src = load_source(ref)
    if src.kind != "pa-grammar":
        raise UsageError(f"{ref} is not a PA grammar")
    return src.payload


def cmd_pa_member(a) -> CommandResult:
    g = _pa(a.file)
    w = _word(a.word, g.alphabet)
    hit = pa_member(g, w, a.budget)
    return _verdict(hit, {"word": format_word(w), "member": hit})


def cmd_pa_enum(a) -> CommandResult:
    return _listing(pa_enumerate(_pa(a.file), a.max_len, a.budget))


def _independence(a, src: Source | None):
    if a.indep is not None:
        return letter_independence(a.indep)
    if src is not None and src.letter_independence is not None:
        return src.letter_independence
    raise UsageError("no letter independence: pass --letter-indep or use a file with a letter-independence line")


def cmd_tc_member(a) -> CommandResult:
    src = load_source(a.file)
    if not isinstance(src.payload, Grammar):
        raise UsageError(f"{a.file} is not a context-free grammar")
    w = _word(a.word, src.payload.alphabet)
    hit = closure_member(src.payload, _independence(a, src), w, a.cap, a.budget)
    return _verdict(hit, {"word": format_word(w), "member": hit})


def cmd_tc_class(a) -> CommandResult:
    w = _word(a.word)
    return _listing(sort_words(trace_class(w, _independence(a, None), a.cap)))


def cmd_pump(a) -> CommandResult:
    src = load_source(a.oracle)
    oracle = src.entry.oracle() if src.entry else _file_oracle(src)
    mode = a.mode.replace("-", "_")
    w = _word(a.word, oracle.alphabet)
    report = find_decomposition(oracle, w, a.N, mode, a.max_m, a.budget)
    data = report.as_dict()
    lines = [f"{report.outcome}: {report.note}"]
    if report.decomposition:
        lines += [f"  {k} = {v or 'eps'}" for k, v in report.decomposition.as_dict().items() if k != "mode"]
        lines += [f"  m={m}: {format_word(pw)} {'in' if hit else 'not in'} L" for m, pw, hit in report.pumped]
    code = {"found": OK, "none": NEGATIVE, "budget-exhausted": BUDGET}[report.outcome]
    return CommandResult(code, "\n".join(lines), data)


def _file_oracle(src: Source):
    from .pumping import closure_oracle, grammar_oracle, mpda_oracle, pa_oracle
    if src.kind == "grammar":
        return grammar_oracle(src.payload)
    if src.kind == "mpda":
        return mpda_oracle(src.payload)
    if src.kind == "pa-grammar":
        return pa_oracle(src.payload)
    return closure_oracle(src.payload, src.letter_independence)


def _entry_json(e: GalleryEntry) -> dict:
    data = {"name": e.name, "kind": e.kind, "note": e.note, "classes": list(e.classes),
            "alphabet": list(e.alphabet), "check_len": e.check_len}
    try:
        data["extension"], data["text"] = e.export()
    except ValueError:
        data["extension"], data["text"] = None, None
    return data


def cmd_gallery_list(a) -> CommandResult:
    names = gallery_list()
    lines = [f"{n:16s} {gallery_get(n).kind:24s} {gallery_get(n).note}" for n in names]
    return CommandResult(OK, "\n".join(lines), names)


def cmd_gallery_get(a) -> CommandResult:
    data = _entry_json(gallery_get(a.name))
    lines = [f"{data['name']} ({data['kind']}): {data['note']}",
             f"classes: {', '.join(data['classes']) or 'none'}"]
    if data["text"]:
        lines.append(data["text"].rstrip())
    return CommandResult(OK, "\n".join(lines), data)


def cmd_gallery_export(a) -> CommandResult:
    e = gallery_get(a.name)
    try:
        ext, text = e.export()
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    path = a.out or f"{e.name}{ext}"
    Path(path).write_text(text, encoding="utf-8")
    return CommandResult(OK, f"wrote {path}", {"path": str(path), "extension": ext})


def cmd_selftest(a) -> CommandResult:
    only = {int(x) for x in a.only.split(",")} if a.only else None
    results = acceptance.run_all(a.seed, only)
    lines = [r.line() for r in results]
    passed = sum(r.passed for r in results)
    lines.append(f"{passed}/{len(results)} criteria passed")
    data = [{"criterion": r.number, "title": r.title, "passed": r.passed, "detail": r.detail,
             "seconds": round(r.seconds, 3), "limit": r.limit} for r in results]
    return CommandResult(OK if passed == len(results) else NEGATIVE, "\n".join(lines), data)


# --- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="pccfl", description="Partially-commutative context-free language toolkit.")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="machine-readable output")
    sub = _Subparsers(p.add_subparsers(dest="command", required=True, parser_class=_Parser), common)

    def budgeted(sp):
        sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="search state budget")
        return sp

    def word(sp):
        sp.add_argument("word", nargs="+", help="word; separate multi-letter tokens with spaces")
        return sp

    sp = sub.add_parser("validate", help="diagnostics and threads")
    sp.add_argument("file")
    sp.set_defaults(fn=cmd_validate)

    sp = budgeted(sub.add_parser("member", help="membership test"))
    sp.add_argument("file")
    word(sp)
    sp.set_defaults(fn=cmd_member)

    sp = budgeted(sub.add_parser("enumerate", help="all words up to a length"))
    sp.add_argument("file")
    sp.add_argument("--max-len", type=int, required=True)
    sp.set_defaults(fn=cmd_enumerate)

    sp = budgeted(sub.add_parser("witness", help="derivation and certificate for a word"))
    sp.add_argument("file")
    word(sp)
    sp.add_argument("--out", help="write the certificate JSON here")
    sp.set_defaults(fn=cmd_witness)

    sp = sub.add_parser("verify-cert", help="check a certificate")
    sp.add_argument("file")
    sp.add_argument("certificate")
    word(sp)
    sp.set_defaults(fn=cmd_verify_cert)

    for name in ("union", "shuffle", "concat"):
        sp = sub.add_parser(name, help=f"{name} of two grammars")
        sp.add_argument("left")
        sp.add_argument("right")
        sp.add_argument("--out")
        sp.set_defaults(fn=cmd_binary)

    sp = sub.add_parser("subst", help="substitute grammars for letters")
    sp.add_argument("file")
    sp.add_argument("--sub", "--map", dest="map", action="append", default=[], metavar="LETTER=GRAMMAR",
                    required=True)
    sp.add_argument("--out")
    sp.set_defaults(fn=cmd_subst)

    sp = sub.add_parser("hom", help="image under a non-erasing homomorphism")
    sp.add_argument("file")
    sp.add_argument("--hom", "--map", dest="map", action="append", default=[], metavar="LETTER=WORD",
                    required=True)
    sp.add_argument("--out")
    sp.set_defaults(fn=cmd_hom)

    sp = sub.add_parser("to-mpda", help="thread projection to a multi-pushdown automaton")
    sp.add_argument("file")
    sp.add_argument("--out")
    sp.set_defaults(fn=cmd_to_mpda)

    mp = sub.add_parser("mpda", help="multi-pushdown automata")
    msub = _Subparsers(mp.add_subparsers(dest="action", required=True, parser_class=_Parser), common)
    sp = budgeted(msub.add_parser("run"))
    sp.add_argument("file")
    word(sp)
    sp.set_defaults(fn=cmd_mpda_run)
    sp = budgeted(msub.add_parser("enum"))
    sp.add_argument("file")
    sp.add_argument("--max-len", type=int, required=True)
    sp.set_defaults(fn=cmd_mpda_enum)

    pp = sub.add_parser("pa", help="PA grammars")
    psub = _Subparsers(pp.add_subparsers(dest="action", required=True, parser_class=_Parser), common)
    sp = budgeted(psub.add_parser("member"))
    sp.add_argument("file")
    word(sp)
    sp.set_defaults(fn=cmd_pa_member)
    sp = budgeted(psub.add_parser("enum"))
    sp.add_argument("file")
    sp.add_argument("--max-len", type=int, required=True)
    sp.set_defaults(fn=cmd_pa_enum)

    tp = sub.add_parser("trace-closure", help="trace closures of context-free languages")
    tsub = _Subparsers(tp.add_subparsers(dest="action", required=True, parser_class=_Parser), common)
    sp = budgeted(tsub.add_parser("member"))
    sp.add_argument("file")
    word(sp)
    sp.add_argument("--letter-indep", "--indep", dest="indep", help='letter pairs, e.g. "b c, a d"')
    sp.add_argument("--cap", type=int, default=DEFAULT_CLASS_CAP)
    sp.set_defaults(fn=cmd_tc_member)
    sp = tsub.add_parser("class")
    word(sp)
    sp.add_argument("--letter-indep", "--indep", dest="indep", required=True)
    sp.add_argument("--cap", type=int, default=DEFAULT_CLASS_CAP)
    sp.set_defaults(fn=cmd_tc_class)

    sp = sub.add_parser("pump", help="search for a pumping decomposition")
    sp.add_argument("--mode", choices=list(MODES) + ["shuffle-alt"], default="shuffle")
    sp.add_argument("--N", type=int, required=True)
    sp.add_argument("--max-m", type=int, default=2)
    sp.add_argument("--oracle", required=True, help="file, gallery:NAME or builtin:NAME")
    sp.add_argument("--budget", type=int, default=2_000_000, help="candidate budget")
    word(sp)
    sp.set_defaults(fn=cmd_pump)

    gp = sub.add_parser("gallery", help="built-in languages")
    gsub = _Subparsers(gp.add_subparsers(dest="action", required=True, parser_class=_Parser), common)
    gsub.add_parser("list").set_defaults(fn=cmd_gallery_list)
    sp = gsub.add_parser("get")
    sp.add_argument("name")
    sp.set_defaults(fn=cmd_gallery_get)
    sp = gsub.add_parser("export")
    sp.add_argument("name")
    sp.add_argument("--out")
    sp.set_defaults(fn=cmd_gallery_export)

    sp = sub.add_parser("selftest", help="run the acceptance suite")
    sp.add_argument("--seed", type=int, default=acceptance.DEFAULT_SEED)
    sp.add_argument("--only", help="comma-separated criterion numbers")
    sp.set_defaults(fn=cmd_selftest)
    return p


def run(argv) -> CommandResult:
    """Parse ``argv`` and execute; never exits the interpreter."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        return CommandResult(USAGE, str(exc), json_requested="--json" in argv)
    try:
        result = args.fn(args)
    except UsageError as exc:
        result = CommandResult(USAGE, f"error: {exc}")
    except BudgetExhausted as exc:
        result = CommandResult(BUDGET, f"budget exhausted: {exc}", {"error": "budget-exhausted", "message": str(exc)})
    except (PccflError, KeyError, ValueError, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else str(exc)
        result = CommandResult(USAGE, f"error: {msg}", {"error": type(exc).__name__, "message": msg})
    result.json_requested = args.json
    return result


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    result = run(argv)
    as_json = result.json_requested
    stream = sys.stdout if result.code in (OK, NEGATIVE) else sys.stderr
    print(result.render(as_json), file=stream)
    return result.code


if __name__ == "__main__":
    sys.exit(main())
