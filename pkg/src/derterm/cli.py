"""Command-line front end.

Exit status: 0 on success / true, 1 on a false check or mismatch, 2 on usage,
syntax or validity errors.
"""
from __future__ import annotations

import argparse
import re
import sys
from dataclasses import dataclass, field
from typing import Optional

from . import automaton as au
from .derivation import derive, differential, letter_slice
from .derived import derived_term_automaton, derived_terms, standard_derived_term_automaton
from .expr import ExprSyntaxError, InvalidExpression, parse, require_valid
from .monoid import MonoidError, make_monoid
from .semiring import WeightSyntaxError, get_semiring
from .series import UnsupportedOperation, denote
from .standard import position_automaton


@dataclass
class RunConfig:
    command: str
    expressions: list
    semiring: str = "int"
    alphabet: Optional[list] = None
    alphabet2: Optional[list] = None
    word: Optional[str] = None
    letter: Optional[str] = None
    max_len: Optional[int] = None
    format: str = "text"
    oracle: bool = False
    keep_initial: bool = False
    rational_star: str = "zero"
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        for letters in (self.alphabet, self.alphabet2):
            if letters is not None and len(set(letters)) != len(letters):
                raise MonoidError(f"alphabet letters must be distinct: {letters}")
        if self.max_len is not None and self.max_len < 0:
            raise ValueError("--max-len must be non-negative")


_ESCAPES = re.compile(r"\\[ez]|<[^>]*>")


def infer_alphabet(texts) -> list:
    """Letters occurring in the expressions, outside escapes and weights."""
    letters = set()
    for t in texts:
        letters.update(c for c in _ESCAPES.sub(" ", t) if c.isalnum())
    return sorted(letters) or ["a"]


def _out(text: str):
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _emit_automaton(a: au.WeightedAutomaton, fmt: str):
    if fmt == "json":
        _out(au.to_json(a))
    elif fmt == "dot":
        _out(au.to_dot(a))
    else:
        _out("states: " + " | ".join(str(l) for l in a.labels) + "\n" + a.matrix_text())


def _oracle_check(a: au.WeightedAutomaton, e, n, monoid, sr) -> int:
    diffs = au.behaviour_series(a, n).differences(denote(e, n, monoid, sr))
    if diffs:
        print(f"oracle mismatch on {monoid.format_word(diffs[0])!r}", file=sys.stderr)
        return 1
    return 0


def run(cfg: RunConfig) -> int:
    sr = get_semiring(cfg.semiring, cfg.rational_star)
    texts = list(cfg.expressions)
    if cfg.word is not None:
        texts.append(cfg.word.replace("|", ""))
    alphabet = cfg.alphabet or infer_alphabet(texts)
    monoid = make_monoid(alphabet, cfg.alphabet2)
    n = cfg.max_len if cfg.max_len is not None else (6 if monoid.is_free else 4)
    exprs = [parse(t, monoid, sr) for t in cfg.expressions]
    for e in exprs:
        require_valid(e, sr)
    e = exprs[0]
    cmd = cfg.command

    if cmd == "standard":
        a = position_automaton(e, monoid, sr).to_automaton()
        _emit_automaton(a, cfg.format)
        return _oracle_check(a, e, n, monoid, sr) if cfg.oracle else 0
    if cmd == "derived":
        build = standard_derived_term_automaton if cfg.keep_initial else derived_term_automaton
        a = build(e, monoid, sr).automaton
        _emit_automaton(a, cfg.format)
        return _oracle_check(a, e, n, monoid, sr) if cfg.oracle else 0
    if cmd == "terms":
        for k in derived_terms(e, sr):
            _out(k.to_text())
        return 0
    if cmd == "eval":
        m = monoid.parse_word(cfg.word)
        _out(sr.format(denote(e, monoid.length(m), monoid, sr)[m]))
        return 0
    if cmd == "series":
        for m, k in denote(e, n, monoid, sr).items():
            _out(f"{sr.format(k)}\t{monoid.format_word(m) or chr(949)}")
        return 0
    if cmd == "derive":
        for h, k in derive(e, cfg.letter, monoid, sr).items():
            _out(f"{sr.format(k)}\t{h.to_text()}")
        return 0
    if cmd == "differential":
        for p, h in differential(e, sr):
            for m, k in sorted(p.items(), key=lambda t: monoid.sort_key(t[0])):
                _out(f"{sr.format(k)}\t{monoid.format(m)}\t{h.to_text()}")
        return 0
    if cmd == "reconcile":
        status = 0
        for a in monoid.alphabet:
            ok = derive(e, a, monoid, sr) == letter_slice(e, a, monoid, sr)
            _out(f"{a}\t{'ok' if ok else 'MISMATCH'}")
            status |= 0 if ok else 1
        return status
    if cmd == "witness":
        s = position_automaton(e, monoid, sr).to_automaton()
        d = derived_term_automaton(e, monoid, sr)
        for row in d.transfer:
            _out(" ".join(sr.format(w) for w in row))
        ok = au.is_conjugate(s, d.automaton, d.transfer)
        _out(f"conjugate: {'true' if ok else 'false'}")
        return 0 if ok else 1
    if cmd == "equiv":
        diffs = denote(exprs[0], n, monoid, sr).differences(denote(exprs[1], n, monoid, sr))
        if diffs:
            _out(f"differ on {monoid.format_word(diffs[0]) or chr(949)}")
            return 1
        _out(f"equal up to length {n}")
        return 0
    raise ValueError(f"unknown command {cmd!r}")


def _letters(text: str) -> list:
    return [a.strip() for a in text.split(",") if a.strip()]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--semiring", default="int",
                        choices=["boolean", "int", "rational", "minplus"])
    common.add_argument("--alphabet", type=_letters, help="comma-separated letters, e.g. a,b")
    common.add_argument("--alphabet2", type=_letters,
                        help="second alphabet; selects the product monoid A* x B*")
    common.add_argument("--max-len", type=int, help="length bound for oracle computations")
    common.add_argument("--format", default="text", choices=["text", "json", "dot"])
    common.add_argument("--rational-star", default="zero", choices=["zero", "analytic"])
    common.add_argument("--file", help="read the (first) expression from this file")

    parser = argparse.ArgumentParser(prog="derterm", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_, nexpr=1):
        p = sub.add_parser(name, parents=[common], help=help_)
        if nexpr == 1:
            p.add_argument("expr", nargs="?" if name != "eval" else None)
        else:
            p.add_argument("exprs", nargs=2, metavar="EXPR")
        return p

    p = add("standard", "position automaton S_E")
    p.add_argument("--oracle", action="store_true", help="also check the behaviour against the series oracle")
    p = add("derived", "derived-term automaton D_E")
    p.add_argument("--keep-initial", action="store_true", help="emit T_E instead of D_E")
    p.add_argument("--oracle", action="store_true")
    add("terms", "list the derived terms")
    p = add("eval", "coefficient of one word")
    p.add_argument("word")
    add("series", "truncated series, one weight<TAB>element line per nonzero coefficient")
    p = add("derive", "derivation by a letter")
    p.add_argument("--letter", required=True)
    add("differential", "weight<TAB>label<TAB>term lines of dE")
    add("reconcile", "derivation vs differential, for every letter")
    add("witness", "transfer matrix from S_E to D_E and the conjugacy check")
    add("equiv", "bounded equality of two expressions", nexpr=2)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "equiv":
        exprs = list(args.exprs)
    else:
        expr_text = args.expr
        if args.file:
            with open(args.file, encoding="utf-8") as fh:
                expr_text = fh.read().strip()
        if expr_text is None:
            parser.error("an expression is required (argument or --file)")
        exprs = [expr_text]
    try:
        cfg = RunConfig(
            command=args.command, expressions=exprs, semiring=args.semiring,
            alphabet=args.alphabet, alphabet2=args.alphabet2,
            word=getattr(args, "word", None), letter=getattr(args, "letter", None),
            max_len=args.max_len, format=args.format, oracle=getattr(args, "oracle", False),
            keep_initial=getattr(args, "keep_initial", False), rational_star=args.rational_star)
        return run(cfg)
    except (ExprSyntaxError, InvalidExpression, MonoidError, UnsupportedOperation,
            WeightSyntaxError, ValueError) as exc:
        print(f"derterm: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
