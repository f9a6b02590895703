"""Scenario DSL: declarations of pages, words, and open books, followed by
commands dispatching into the surgery/cobordism/kirby/verification modules.

Grammar (one statement per line; '#' starts a comment; blank lines skipped):

    page <name> dim=<2n> handles=[k:count,...] stein=<bool> spheres=[a,b,...]
    word <name> = <label>[^<exp>] ...
    openbook <name> = (<page>, <word>)

    sum <openbook> <openbook> -> <name>
    surgery <manifold> sphere=<label> k=<int> [param=<id>] -> <name>
    cover <manifold> q=<int> over=binding -> <name>
    fibered <page> <word> <word> -> <name>
    kirby cover <page> q=<int> [base=<text>] [out=<path>]
    kirby surgery k=<int> [out=<path>]
    verify equal <manifold> <manifold>
    verify forms [samples=<int>]
    verify twist [n=<int>] [samples=<int>]

Errors carry a source position and one of three codes: E_SYNTAX (malformed
statement), E_UNDECLARED (name used before declaration), E_ARITY (wrong
argument count/keys for a known statement).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Optional

from . import verify as verify_mod
from .errors import ContactCalcError
from .kirby import branched_cover_diagram, serialize_diagram, surgery_cobordism_diagram
from .surgery import (MonodromyWord, OpenBook, PageSpec, branched_cover,
                      contact_surgery, fibered_manifold, liouville_sum_openbooks,
                      open_book_descriptor, reduce_word)

E_SYNTAX = "E_SYNTAX"
E_UNDECLARED = "E_UNDECLARED"
E_ARITY = "E_ARITY"


class ScenarioError(ContactCalcError):
    def __init__(self, code: str, line: int, col: int, message: str):
        super().__init__(f"line {line}, col {col}: [{code}] {message}")
        self.code = code
        self.line = line
        self.col = col


@dataclass(frozen=True)
class Token:
    text: str
    line: int
    col: int


@dataclass(frozen=True)
class Statement:
    kind: str
    tokens: tuple[Token, ...]

    @property
    def line(self) -> int:
        return self.tokens[0].line


@dataclass(frozen=True)
class WordDecl:
    word: MonodromyWord
    letter_tokens: tuple[Token, ...]


@dataclass
class Scenario:
    pages: dict[str, PageSpec] = field(default_factory=dict)
    words: dict[str, WordDecl] = field(default_factory=dict)
    openbooks: dict[str, OpenBook] = field(default_factory=dict)
    commands: list[Statement] = field(default_factory=list)


_NAME = re.compile(r"^[A-Za-z_][A-Za-z0-9_*()-]*$")
_LETTER = re.compile(r"^([A-Za-z_][A-Za-z0-9_]*)(?:\^(-?\d+))?$")


def _tokenize(line: str, lineno: int) -> list[Token]:
    line = line.split("#", 1)[0]
    return [Token(m.group(0), lineno, m.start() + 1)
            for m in re.finditer(r"\S+", line)]


def _kv(tok: Token) -> Optional[tuple[str, str]]:
    if "=" in tok.text and not tok.text.startswith("="):
        key, _, val = tok.text.partition("=")
        return key, val
    return None


def _parse_kvs(toks: list[Token], allowed: set[str], required: set[str],
               stmt: str) -> dict[str, tuple[str, Token]]:
    out: dict[str, tuple[str, Token]] = {}
    for tok in toks:
        pair = _kv(tok)
        if pair is None:
            raise ScenarioError(E_SYNTAX, tok.line, tok.col,
                                f"expected key=value in {stmt}, got {tok.text!r}")
        key, val = pair
        if key not in allowed:
            raise ScenarioError(E_ARITY, tok.line, tok.col,
                                f"unknown key {key!r} for {stmt}")
        if key in out:
            raise ScenarioError(E_ARITY, tok.line, tok.col,
                                f"duplicate key {key!r} for {stmt}")
        out[key] = (val, tok)
    missing = required - out.keys()
    if missing:
        t = toks[0] if toks else Token(stmt, 0, 0)
        raise ScenarioError(E_ARITY, t.line, t.col,
                            f"{stmt} missing keys: {', '.join(sorted(missing))}")
    return out


def _int(val: str, tok: Token, what: str) -> int:
    try:
        return int(val)
    except ValueError:
        raise ScenarioError(E_SYNTAX, tok.line, tok.col,
                            f"{what} must be an integer, got {val!r}") from None


def _bool(val: str, tok: Token, what: str) -> bool:
    if val in ("true", "false"):
        return val == "true"
    raise ScenarioError(E_SYNTAX, tok.line, tok.col,
                        f"{what} must be true or false, got {val!r}")


def _bracket_list(val: str, tok: Token, what: str) -> list[str]:
    if not (val.startswith("[") and val.endswith("]")):
        raise ScenarioError(E_SYNTAX, tok.line, tok.col,
                            f"{what} must be a [...] list, got {val!r}")
    inner = val[1:-1]
    return [piece for piece in inner.split(",") if piece] if inner else []


def _parse_page(toks: list[Token]) -> tuple[str, PageSpec]:
    if len(toks) < 2 or _kv(toks[1]) is not None:
        t = toks[0]
        raise ScenarioError(E_SYNTAX, t.line, t.col, "page needs a name")
    name = toks[1].text
    kvs = _parse_kvs(toks[2:], {"dim", "handles", "stein", "spheres"},
                     {"dim", "handles", "stein"}, "page")
    dim = _int(*kvs["dim"], "dim")
    if dim < 2 or dim % 2 != 0:
        raise ScenarioError(E_SYNTAX, kvs["dim"][1].line, kvs["dim"][1].col,
                            f"page dim must be a positive even integer, got {dim}")
    handles = []
    for piece in _bracket_list(*kvs["handles"], "handles"):
        if ":" not in piece:
            raise ScenarioError(E_SYNTAX, kvs["handles"][1].line,
                                kvs["handles"][1].col,
                                f"handle entry {piece!r} must be index:count")
        k, _, c = piece.partition(":")
        handles.append((_int(k, kvs["handles"][1], "handle index"),
                        _int(c, kvs["handles"][1], "handle count")))
    stein = _bool(*kvs["stein"], "stein")
    spheres = tuple(_bracket_list(*kvs["spheres"], "spheres")) \
        if "spheres" in kvs else ()
    try:
        page = PageSpec(name, dim // 2, tuple(handles), stein, spheres)
    except ContactCalcError as exc:
        t = toks[0]
        raise ScenarioError(E_SYNTAX, t.line, t.col, str(exc)) from None
    return name, page


def _parse_word(toks: list[Token]) -> tuple[str, WordDecl]:
    if len(toks) < 3 or toks[2].text != "=":
        t = toks[0]
        raise ScenarioError(E_SYNTAX, t.line, t.col,
                            "word syntax: word <name> = <letters>")
    name = toks[1].text
    letters = []
    letter_tokens = []
    for tok in toks[3:]:
        m = _LETTER.match(tok.text)
        if m is None:
            raise ScenarioError(E_SYNTAX, tok.line, tok.col,
                                f"bad word letter {tok.text!r}")
        exp = int(m.group(2)) if m.group(2) is not None else 1
        if exp != 0:
            letters.append((m.group(1), exp))
            letter_tokens.append(tok)
    return name, WordDecl(reduce_word(MonodromyWord.raw(tuple(letters))),
                          tuple(letter_tokens))


def _parse_openbook(s: Scenario, toks: list[Token]) -> tuple[str, OpenBook]:
    # openbook <name> = (<page>, <word>)
    text = " ".join(t.text for t in toks[1:])
    m = re.match(r"^(\S+)\s*=\s*\(\s*([^,()\s]+)\s*,\s*([^,()\s]+)\s*\)$", text)
    if m is None:
        t = toks[0]
        raise ScenarioError(E_SYNTAX, t.line, t.col,
                            "openbook syntax: openbook <name> = (<page>, <word>)")
    name, page_name, word_name = m.groups()
    t = toks[0]
    if page_name not in s.pages:
        raise ScenarioError(E_UNDECLARED, t.line, t.col,
                            f"page {page_name!r} not declared")
    if word_name not in s.words:
        raise ScenarioError(E_UNDECLARED, t.line, t.col,
                            f"word {word_name!r} not declared")
    page = s.pages[page_name]
    decl = s.words[word_name]
    for (label, _), tok in zip(decl.word.letters, decl.letter_tokens):
        if label not in page.spheres:
            raise ScenarioError(E_UNDECLARED, tok.line, tok.col,
                                f"sphere label {label!r} not on page {page_name!r}")
    return name, OpenBook(page, decl.word)


_COMMANDS = {"sum", "surgery", "cover", "fibered", "kirby", "verify"}


def parse_scenario(text: str) -> Scenario:
    s = Scenario()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        toks = _tokenize(raw, lineno)
        if not toks:
            continue
        head = toks[0]
        if head.text == "page":
            name, page = _parse_page(toks)
            s.pages[name] = page
        elif head.text == "word":
            name, decl = _parse_word(toks)
            s.words[name] = decl
        elif head.text == "openbook":
            name, ob = _parse_openbook(s, toks)
            s.openbooks[name] = ob
        elif head.text in _COMMANDS:
            stmt = Statement(head.text, tuple(toks))
            _validate_command(s, stmt)
            s.commands.append(stmt)
        else:
            raise ScenarioError(E_SYNTAX, head.line, head.col,
                                f"unknown statement {head.text!r}")
    return s


def _split_arrow(toks: tuple[Token, ...], stmt: str) -> tuple[list[Token], Optional[str]]:
    texts = [t.text for t in toks]
    if "->" in texts:
        i = texts.index("->")
        if i != len(toks) - 2:
            t = toks[i]
            raise ScenarioError(E_SYNTAX, t.line, t.col,
                                f"{stmt}: '->' must be followed by one name")
        return list(toks[1:i]), toks[-1].text
    return list(toks[1:]), None


def _positional(args: list[Token]) -> list[Token]:
    return [t for t in args if _kv(t) is None]


def _validate_command(s: Scenario, stmt: Statement):
    """Static checks at parse time: declared names and argument shapes."""
    head = stmt.tokens[0]
    args, target = _split_arrow(stmt.tokens, stmt.kind)
    declared = set(s.openbooks) | {t for t in _targets_so_far(s)}
    if stmt.kind == "sum":
        pos = _positional(args)
        if len(pos) != 2:
            raise ScenarioError(E_ARITY, head.line, head.col,
                                "sum needs exactly two open books")
        for t in pos:
            if t.text not in s.openbooks:
                raise ScenarioError(E_UNDECLARED, t.line, t.col,
                                    f"open book {t.text!r} not declared")
        if target is None:
            raise ScenarioError(E_ARITY, head.line, head.col,
                                "sum needs '-> <name>'")
    elif stmt.kind == "surgery":
        pos = _positional(args)
        if len(pos) != 1:
            raise ScenarioError(E_ARITY, head.line, head.col,
                                "surgery needs one manifold argument")
        if pos[0].text not in declared:
            raise ScenarioError(E_UNDECLARED, pos[0].line, pos[0].col,
                                f"manifold {pos[0].text!r} not declared")
        _parse_kvs([t for t in args if _kv(t) is not None],
                   {"sphere", "k", "param"}, {"sphere", "k"}, "surgery")
        if target is None:
            raise ScenarioError(E_ARITY, head.line, head.col,
                                "surgery needs '-> <name>'")
    elif stmt.kind == "cover":
        pos = _positional(args)
        if len(pos) != 1:
            raise ScenarioError(E_ARITY, head.line, head.col,
                                "cover needs one manifold argument")
        if pos[0].text not in declared:
            raise ScenarioError(E_UNDECLARED, pos[0].line, pos[0].col,
                                f"manifold {pos[0].text!r} not declared")
        _parse_kvs([t for t in args if _kv(t) is not None],
                   {"q", "over"}, {"q"}, "cover")
        if target is None:
            raise ScenarioError(E_ARITY, head.line, head.col,
                                "cover needs '-> <name>'")
    elif stmt.kind == "fibered":
        pos = _positional(args)
        if len(pos) != 3:
            raise ScenarioError(E_ARITY, head.line, head.col,
                                "fibered needs <page> <word> <word>")
        if pos[0].text not in s.pages:
            raise ScenarioError(E_UNDECLARED, pos[0].line, pos[0].col,
                                f"page {pos[0].text!r} not declared")
        for t in pos[1:]:
            if t.text not in s.words:
                raise ScenarioError(E_UNDECLARED, t.line, t.col,
                                    f"word {t.text!r} not declared")
        if target is None:
            raise ScenarioError(E_ARITY, head.line, head.col,
                                "fibered needs '-> <name>'")
    elif stmt.kind == "kirby":
        pos = _positional(args)
        if not pos or pos[0].text not in ("cover", "surgery"):
            raise ScenarioError(E_ARITY, head.line, head.col,
                                "kirby needs mode 'cover' or 'surgery'")
        if pos[0].text == "cover":
            if len(pos) != 2:
                raise ScenarioError(E_ARITY, head.line, head.col,
                                    "kirby cover needs a page name")
            if pos[1].text not in s.pages:
                raise ScenarioError(E_UNDECLARED, pos[1].line, pos[1].col,
                                    f"page {pos[1].text!r} not declared")
            _parse_kvs([t for t in args if _kv(t) is not None],
                       {"q", "base", "out"}, {"q"}, "kirby cover")
        else:
            if len(pos) != 1:
                raise ScenarioError(E_ARITY, head.line, head.col,
                                    "kirby surgery takes only key=value args")
            _parse_kvs([t for t in args if _kv(t) is not None],
                       {"k", "out"}, {"k"}, "kirby surgery")
    elif stmt.kind == "verify":
        pos = _positional(args)
        if not pos:
            raise ScenarioError(E_ARITY, head.line, head.col,
                                "verify needs a mode: equal|forms|twist")
        mode = pos[0].text
        if mode == "equal":
            if len(pos) != 3:
                raise ScenarioError(E_ARITY, head.line, head.col,
                                    "verify equal needs two manifold names")
            for t in pos[1:]:
                if t.text not in declared:
                    raise ScenarioError(E_UNDECLARED, t.line, t.col,
                                        f"manifold {t.text!r} not declared")
        elif mode in ("forms", "twist"):
            _parse_kvs([t for t in args if _kv(t) is not None],
                       {"n", "samples"}, set(), f"verify {mode}")
        else:
            raise ScenarioError(E_SYNTAX, pos[0].line, pos[0].col,
                                f"unknown verify mode {mode!r}")


def _targets_so_far(s: Scenario) -> list[str]:
    out = []
    for stmt in s.commands:
        _, target = _split_arrow(stmt.tokens, stmt.kind)
        if target is not None:
            out.append(target)
    return out


# ---------------------------------------------------------------------------
# Execution
# ---------------------------------------------------------------------------

def run_scenario(s: Scenario, seed: int = 0, tol: float = 1e-5,
                 samples: int = 25,
                 out_dir: Optional[str] = None) -> tuple[str, int, list[str]]:
    """Execute the scenario; returns (report text, exit status, files written).

    The report is line-oriented ``metric<TAB>value<TAB>tolerance<TAB>status``
    with status PASS/FAIL for verify commands and OK for constructions; it is
    byte-stable for fixed inputs and seed.
    """
    env: dict[str, object] = {
        name: open_book_descriptor(ob) for name, ob in s.openbooks.items()}
    lines: list[str] = []
    files: list[str] = []
    failed = False

    def ok(metric: str, value: str):
        lines.append(f"{metric}\t{value}\t-\tOK")

    for stmt in s.commands:
        args, target = _split_arrow(stmt.tokens, stmt.kind)
        pos = _positional(args)
        kvs = {}
        for t in args:
            pair = _kv(t)
            if pair is not None:
                kvs[pair[0]] = pair[1]
        try:
            if stmt.kind == "sum":
                d1 = env[pos[0].text]
                d2 = env[pos[1].text]
                res = liouville_sum_openbooks(d1.open_book, d2.open_book)
                env[target] = res
                ok(f"sum:{target}", str(res.word))
            elif stmt.kind == "surgery":
                m = env[pos[0].text]
                res = contact_surgery(m, kvs["sphere"], int(kvs["k"]),
                                      kvs.get("param", "std"))
                env[target] = res
                ok(f"surgery:{target}", str(res.word))
            elif stmt.kind == "cover":
                m = env[pos[0].text]
                res = branched_cover(m, kvs.get("over", "binding"), int(kvs["q"]))
                env[target] = res
                ok(f"cover:{target}", str(res.word))
            elif stmt.kind == "fibered":
                page = s.pages[pos[0].text]
                res = fibered_manifold(page, s.words[pos[1].text].word,
                                       s.words[pos[2].text].word)
                env[target] = res
                ok(f"fibered:{target}", str(res.presentation))
            elif stmt.kind == "kirby":
                if pos[0].text == "cover":
                    page = s.pages[pos[1].text]
                    base = (kvs["base"],) if "base" in kvs else ()
                    diagram = branched_cover_diagram(page, base, int(kvs["q"]))
                else:
                    diagram = surgery_cobordism_diagram(int(kvs["k"]))
                text = serialize_diagram(diagram)
                if "out" in kvs:
                    path = kvs["out"] if out_dir is None \
                        else f"{out_dir.rstrip('/')}/{kvs['out']}"
                    with open(path, "w", encoding="utf-8") as fh:
                        fh.write(text)
                    files.append(path)
                    ok("kirby:file", path)
                else:
                    ok("kirby:dotted", str(len(diagram.dotted)))
                    ok("kirby:two_handles", str(len(diagram.two_handles)))
            elif stmt.kind == "verify":
                mode = pos[0].text
                if mode == "equal":
                    a = env[pos[1].text]
                    b = env[pos[2].text]
                    equal = a.word_equals(b)
                    failed = failed or not equal
                    lines.append(
                        f"verify:equal:{pos[1].text}:{pos[2].text}"
                        f"\t{'equal' if equal else 'distinct'}\t-"
                        f"\t{'PASS' if equal else 'FAIL'}")
                else:
                    if mode == "forms":
                        rep = verify_mod.verify_forms(
                            seed, samples=int(kvs.get("samples", samples)))
                    else:
                        rep = verify_mod.verify_twist(
                            int(kvs.get("n", 2)), seed, tol,
                            int(kvs.get("samples", samples)))
                    failed = failed or verify_mod.report_failed(rep)
                    lines.extend(line.render() for line in rep)
        except ScenarioError:
            raise
        except (ContactCalcError, KeyError, ValueError) as exc:
            head = stmt.tokens[0]
            raise ScenarioError(E_SYNTAX, head.line, head.col,
                                f"{stmt.kind} failed: {exc}") from exc

    return "".join(line + "\n" for line in lines), (1 if failed else 0), files
