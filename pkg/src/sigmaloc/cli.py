"""Command line front end: a small declaration language for finite
lattices and cover presentations, plus check/derive/booleanize-style
commands over them.

Input files hold named blocks and commands:

    lattice Chain3 {
      elements: 0 a 1;
      leq: 0<=a, a<=1;
      pos: a 1;
    }

    cover Pair {
      base: bot x y top;
      top: top;
      meet: x*y=bot, x*top=x, y*top=y, bot*x=bot, bot*y=bot, bot*top=bot;
      axiom: top <| x y;
      axiom: bot <| ;
    }

    check Chain3 overt
    derive Pair top <| x y budget 100

'#' starts a comment.  The meet table is completed automatically with
idempotence, commutativity, and the top as unit; any other missing pair
is an error.  leq is closed reflexively and transitively.  Covers may
also carry a pos field (positivity on the base) so that
`check NAME overlap` works for them.

Exit status: 0 when every command passes, 1 when some command fails
(a FAIL report or an unknown derivation), 2 on parse or usage errors.
"""

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Optional, Tuple

from .booleanization import (
    Positivity,
    RepresentativeDependentPos,
    SizeCapExceeded,
    bool_congruence,
    check_overt,
    check_overt_cover,
    enumerate_congruences,
    is_overlap_cover,
    is_sigma_overlap_algebra,
    quotient,
)
from .formal_cover import (
    BaseTooLarge,
    CoverError,
    CoverPresentation,
    check_formal_cover_axioms,
    derive,
    derive_with_trace,
    envelope_cover,
    frame_of_presentation,
)
from .reports import CheckReport
from .semidecision import Confirmed
from .sigma_frame import LatticeError, find_isomorphism, lattice_from_leq_pairs


class ParseError(Exception):
    def __init__(self, message, line, col):
        super().__init__("line %d, col %d: %s" % (line, col, message))
        self.message = message
        self.line = line
        self.col = col


class DocumentError(Exception):
    """Semantic error in an otherwise well-formed document."""


_SYMBOLS = ("<=", "<|", "{", "}", ":", ";", ",", "*", "=")


@dataclass(frozen=True)
class _Token:
    kind: str
    value: str
    line: int
    col: int


def _tokenize(text):
    """Tokens plus newline markers.

    Newlines are insignificant except that they terminate a derive
    command's cover list; the parser skips them everywhere else.
    """
    tokens = []
    line, col = 1, 1
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            tokens.append(_Token("nl", "\n", line, col))
            i += 1
            line += 1
            col = 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        if ch == "#":
            while i < n and text[i] != "\n":
                i += 1
            continue
        two = text[i:i + 2]
        if two in _SYMBOLS:
            tokens.append(_Token("sym", two, line, col))
            i += 2
            col += 2
            continue
        if ch in _SYMBOLS:
            tokens.append(_Token("sym", ch, line, col))
            i += 1
            col += 1
            continue
        if ch.isalnum() or ch == "_":
            start = i
            start_col = col
            while i < n and (text[i].isalnum() or text[i] == "_"):
                i += 1
                col += 1
            tokens.append(_Token("word", text[start:i], line, start_col))
            continue
        raise ParseError("unexpected character %r" % ch, line, col)
    tokens.append(_Token("eof", "", line, col))
    return tokens


@dataclass(frozen=True)
class LatticeBlock:
    name: str
    elements: Tuple[str, ...]
    leq_pairs: Tuple[Tuple[str, str], ...]
    pos: Optional[Tuple[str, ...]]
    location: Tuple[int, int] = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class CoverBlock:
    name: str
    base: Tuple[str, ...]
    top: str
    meet_entries: Tuple[Tuple[str, str, str], ...]
    axioms: Tuple[Tuple[str, Tuple[str, ...]], ...]
    pos: Optional[Tuple[str, ...]]
    location: Tuple[int, int] = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class CheckCommand:
    target: str
    aspect: str
    location: Tuple[int, int] = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class BooleanizeCommand:
    target: str
    location: Tuple[int, int] = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class CongruencesCommand:
    target: str
    location: Tuple[int, int] = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class DeriveCommand:
    target: str
    element: str
    cover: Tuple[str, ...]
    budget: Optional[int]
    location: Tuple[int, int] = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class EnvelopeCommand:
    target: str
    location: Tuple[int, int] = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class Document:
    items: Tuple


_ASPECTS = ("overt", "overlap", "formalcover", "lattice")


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        while self.tokens[self.pos].kind == "nl":
            self.pos += 1
        return self.tokens[self.pos]

    def peek_raw(self):
        return self.tokens[self.pos]

    def advance(self):
        t = self.peek()
        if t.kind != "eof":
            self.pos += 1
        return t

    def fail(self, message, token=None):
        t = token or self.peek()
        raise ParseError(message, t.line, t.col)

    def expect_sym(self, value):
        t = self.advance()
        if t.kind != "sym" or t.value != value:
            self.fail("expected %r" % value, t)
        return t

    def expect_word(self, what="identifier"):
        t = self.advance()
        if t.kind != "word":
            self.fail("expected %s" % what, t)
        return t

    def words_until_sym(self, stop):
        out = []
        while self.peek().kind == "word":
            out.append(self.advance().value)
        self.expect_sym(stop)
        return tuple(out)

    def parse_document(self):
        items = []
        while True:
            t = self.peek()
            if t.kind == "eof":
                break
            if t.kind != "word":
                self.fail("expected a block or command")
            if t.value == "lattice":
                items.append(self.parse_lattice())
            elif t.value == "cover":
                items.append(self.parse_cover())
            elif t.value == "check":
                items.append(self.parse_check())
            elif t.value == "booleanize":
                self.advance()
                name = self.expect_word("name")
                items.append(BooleanizeCommand(name.value,
                                               location=(t.line, t.col)))
            elif t.value == "congruences":
                self.advance()
                name = self.expect_word("name")
                items.append(CongruencesCommand(name.value,
                                                location=(t.line, t.col)))
            elif t.value == "derive":
                items.append(self.parse_derive())
            elif t.value == "envelope":
                self.advance()
                name = self.expect_word("name")
                items.append(EnvelopeCommand(name.value,
                                             location=(t.line, t.col)))
            else:
                self.fail("unknown keyword %r" % t.value)
        return Document(tuple(items))

    def parse_lattice(self):
        head = self.advance()
        name = self.expect_word("lattice name").value
        self.expect_sym("{")
        elements = None
        leq_pairs = ()
        pos = None
        while True:
            t = self.advance()
            if t.kind == "sym" and t.value == "}":
                break
            if t.kind != "word":
                self.fail("expected a field or '}'", t)
            self.expect_sym(":")
            if t.value == "elements":
                elements = self.words_until_sym(";")
                if not elements:
                    self.fail("elements list is empty", t)
            elif t.value == "leq":
                leq_pairs = self.parse_leq_pairs()
            elif t.value == "pos":
                pos = self.words_until_sym(";")
            else:
                self.fail("unknown lattice field %r" % t.value, t)
        if elements is None:
            self.fail("lattice %s has no elements field" % name, head)
        return LatticeBlock(name, elements, leq_pairs, pos,
                            location=(head.line, head.col))

    def parse_leq_pairs(self):
        pairs = []
        if self.peek().kind == "sym" and self.peek().value == ";":
            self.advance()
            return ()
        while True:
            x = self.expect_word().value
            self.expect_sym("<=")
            y = self.expect_word().value
            pairs.append((x, y))
            t = self.advance()
            if t.kind == "sym" and t.value == ";":
                break
            if not (t.kind == "sym" and t.value == ","):
                self.fail("expected ',' or ';'", t)
        return tuple(pairs)

    def parse_cover(self):
        head = self.advance()
        name = self.expect_word("cover name").value
        self.expect_sym("{")
        base = None
        top = None
        meet_entries = ()
        axioms = []
        pos = None
        while True:
            t = self.advance()
            if t.kind == "sym" and t.value == "}":
                break
            if t.kind != "word":
                self.fail("expected a field or '}'", t)
            self.expect_sym(":")
            if t.value == "base":
                base = self.words_until_sym(";")
                if not base:
                    self.fail("base list is empty", t)
            elif t.value == "top":
                top = self.expect_word().value
                self.expect_sym(";")
            elif t.value == "meet":
                meet_entries = self.parse_meet_entries()
            elif t.value == "axiom":
                axiom_head = self.expect_word().value
                self.expect_sym("<|")
                cover = self.words_until_sym(";")
                axioms.append((axiom_head, cover))
            elif t.value == "pos":
                pos = self.words_until_sym(";")
            else:
                self.fail("unknown cover field %r" % t.value, t)
        if base is None:
            self.fail("cover %s has no base field" % name, head)
        if top is None:
            self.fail("cover %s has no top field" % name, head)
        return CoverBlock(name, base, top, meet_entries, tuple(axioms), pos,
                          location=(head.line, head.col))

    def parse_meet_entries(self):
        entries = []
        if self.peek().kind == "sym" and self.peek().value == ";":
            self.advance()
            return ()
        while True:
            x = self.expect_word().value
            self.expect_sym("*")
            y = self.expect_word().value
            self.expect_sym("=")
            v = self.expect_word().value
            entries.append((x, y, v))
            t = self.advance()
            if t.kind == "sym" and t.value == ";":
                break
            if not (t.kind == "sym" and t.value == ","):
                self.fail("expected ',' or ';'", t)
        return tuple(entries)

    def parse_check(self):
        head = self.advance()
        name = self.expect_word("name").value
        aspect = self.expect_word("aspect").value
        if aspect not in _ASPECTS:
            self.fail("unknown aspect %r (one of %s)"
                      % (aspect, ", ".join(_ASPECTS)))
        return CheckCommand(name, aspect, location=(head.line, head.col))

    def parse_derive(self):
        head = self.advance()
        name = self.expect_word("name").value
        element = self.expect_word().value
        self.expect_sym("<|")
        cover = []
        budget = None
        while self.peek_raw().kind == "word":
            w = self.peek_raw()
            self.pos += 1
            if w.value == "budget":
                b = self.expect_word("budget value")
                if not b.value.isdigit():
                    self.fail("budget must be a natural number", b)
                budget = int(b.value)
                break
            cover.append(w.value)
        return DeriveCommand(name, element, tuple(cover), budget,
                             location=(head.line, head.col))


def parse(text):
    """Parse a document; raises ParseError with line and column."""
    return _Parser(_tokenize(text)).parse_document()


def pretty_print(document):
    """Canonical text for a document; parse(pretty_print(d)) == d."""
    chunks = []
    for item in document.items:
        if isinstance(item, LatticeBlock):
            lines = ["lattice %s {" % item.name,
                     "  elements: %s;" % " ".join(item.elements)]
            if item.leq_pairs:
                lines.append("  leq: %s;" % ", ".join(
                    "%s<=%s" % p for p in item.leq_pairs))
            if item.pos is not None:
                lines.append("  pos:%s;" % _word_list(item.pos))
            lines.append("}")
            chunks.append("\n".join(lines))
        elif isinstance(item, CoverBlock):
            lines = ["cover %s {" % item.name,
                     "  base: %s;" % " ".join(item.base),
                     "  top: %s;" % item.top]
            if item.meet_entries:
                lines.append("  meet: %s;" % ", ".join(
                    "%s*%s=%s" % e for e in item.meet_entries))
            for head, cover in item.axioms:
                lines.append("  axiom: %s <|%s;" % (head, _word_list(cover)))
            if item.pos is not None:
                lines.append("  pos:%s;" % _word_list(item.pos))
            lines.append("}")
            chunks.append("\n".join(lines))
        elif isinstance(item, CheckCommand):
            chunks.append("check %s %s" % (item.target, item.aspect))
        elif isinstance(item, BooleanizeCommand):
            chunks.append("booleanize %s" % item.target)
        elif isinstance(item, CongruencesCommand):
            chunks.append("congruences %s" % item.target)
        elif isinstance(item, DeriveCommand):
            text = "derive %s %s <|%s" % (item.target, item.element,
                                          _word_list(item.cover))
            if item.budget is not None:
                text += " budget %d" % item.budget
            chunks.append(text)
        elif isinstance(item, EnvelopeCommand):
            chunks.append("envelope %s" % item.target)
        else:
            raise TypeError("not a document item: %r" % (item,))
    return "\n\n".join(chunks) + "\n"


def _word_list(words):
    return (" " + " ".join(words)) if words else ""


def build_lattice(block):
    """Lattice and optional positivity from a lattice block."""
    seen = set()
    for x in block.elements:
        if x in seen:
            raise DocumentError("lattice %s: duplicate element %r"
                                % (block.name, x))
        seen.add(x)
    for x, y in block.leq_pairs:
        for v in (x, y):
            if v not in seen:
                raise DocumentError("lattice %s: leq mentions unknown "
                                    "element %r" % (block.name, v))
    try:
        lattice = lattice_from_leq_pairs(list(block.elements),
                                         list(block.leq_pairs))
    except LatticeError as err:
        detail = err.args[0]
        if err.witnesses:
            detail += " (%s)" % ", ".join(
                _fmt_value(w) for w in err.witnesses)
        raise DocumentError("lattice %s: %s" % (block.name, detail))
    pos = None
    if block.pos is not None:
        for v in block.pos:
            if v not in seen:
                raise DocumentError("lattice %s: pos mentions unknown "
                                    "element %r" % (block.name, v))
        pos = Positivity.of(block.pos)
    return lattice, pos


def build_cover(block):
    """Presentation and optional positivity from a cover block.

    The meet table is completed with idempotence, the top as unit, and
    commutativity; a pair still missing after that is an error.
    """
    base = block.base
    seen = set()
    for x in base:
        if x in seen:
            raise DocumentError("cover %s: duplicate base element %r"
                                % (block.name, x))
        seen.add(x)
    if block.top not in seen:
        raise DocumentError("cover %s: top %r is not in the base"
                            % (block.name, block.top))
    table = {}

    def put(x, y, v, declared):
        old = table.get((x, y))
        if old is not None and old != v:
            if declared:
                raise DocumentError("cover %s: meet table conflict at "
                                    "%s*%s" % (block.name, x, y))
            return
        table[(x, y)] = v

    for x, y, v in block.meet_entries:
        for w in (x, y, v):
            if w not in seen:
                raise DocumentError("cover %s: meet mentions unknown "
                                    "element %r" % (block.name, w))
        put(x, y, v, True)
        put(y, x, v, True)
    for x in base:
        put(x, x, x, False)
        put(x, block.top, x, False)
        put(block.top, x, x, False)
    for x in base:
        for y in base:
            if (x, y) not in table:
                raise DocumentError("cover %s: meet table is missing "
                                    "%s*%s" % (block.name, x, y))
    for head, cover in block.axioms:
        for w in (head,) + cover:
            if w not in seen:
                raise DocumentError("cover %s: axiom mentions unknown "
                                    "element %r" % (block.name, w))
    try:
        p = CoverPresentation.finite(
            base=list(base),
            meet=dict(table),
            top=block.top,
            axioms=[(h, tuple(c)) for h, c in block.axioms],
        )
    except CoverError as err:
        raise DocumentError("cover %s: %s" % (block.name, err.args[0]))
    pos = None
    if block.pos is not None:
        for v in block.pos:
            if v not in seen:
                raise DocumentError("cover %s: pos mentions unknown "
                                    "element %r" % (block.name, v))
        pos = Positivity.of(block.pos)
    return p, pos


def _fmt_value(v):
    if isinstance(v, str):
        return v
    if isinstance(v, (frozenset, set)):
        return "{%s}" % " ".join(sorted(str(x) for x in v))
    if isinstance(v, (tuple, list)):
        return "(%s)" % " ".join(_fmt_value(x) for x in v)
    return str(v)


def _json_safe(v):
    if v is None or isinstance(v, (bool, int, str)):
        return v
    if isinstance(v, (frozenset, set)):
        return [_json_safe(x) for x in sorted(v, key=str)]
    if isinstance(v, (tuple, list)):
        return [_json_safe(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _json_safe(x) for k, x in v.items()}
    return str(v)


def _report_result(report):
    if report.ok:
        return "pass (%s)" % report.detail, report
    if report.witnesses:
        return ("FAIL (%s; witness: %s)"
                % (report.detail,
                   ", ".join(_fmt_value(w) for w in report.witnesses)),
                report)
    return "FAIL (%s)" % report.detail, report


def _trace_lines(trace, depth, out):
    pad = "  " * depth
    rule = trace[0]
    if rule == "refl":
        out.append("%s%s [refl]" % (pad, trace[1]))
    elif rule == "below":
        out.append("%s%s <= %s [below]" % (pad, trace[1], trace[2]))
    elif rule == "axiom":
        cover = trace[2]
        out.append("%s%s <| {%s} [axiom]"
                   % (pad, trace[1], " ".join(str(c) for c in cover)))
        for child in trace[3]:
            _trace_lines(child, depth + 1, out)
    elif rule == "axiom-in-cover":
        out.append("%s%s [axiom within cover]" % (pad, trace[1]))
    elif rule == "up":
        out.append("%s%s <= %s [up]" % (pad, trace[1], trace[2]))
        _trace_lines(trace[3], depth + 1, out)
    elif rule == "up-axiom":
        cover = trace[3]
        out.append("%s%s <| {%s} [axiom at %s]"
                   % (pad, trace[1], " ".join(str(c) for c in cover),
                      trace[2]))
        for child in trace[4]:
            _trace_lines(child, depth + 1, out)
    elif rule == "top":
        out.append("%s%s <= top [top]" % (pad, trace[1]))
        _trace_lines(trace[2], depth + 1, out)
    else:
        out.append("%s%s" % (pad, _fmt_value(trace)))


class _Runner:
    """Executes a document's commands against its built blocks."""

    def __init__(self, document, budget_default, max_base):
        self.budget_default = budget_default
        self.max_base = max_base
        self.lattices = {}
        self.covers = {}
        names = set()
        for item in document.items:
            if isinstance(item, (LatticeBlock, CoverBlock)):
                if item.name in names:
                    raise DocumentError("duplicate name %r" % item.name)
                names.add(item.name)
                if isinstance(item, LatticeBlock):
                    self.lattices[item.name] = build_lattice(item)
                else:
                    self.covers[item.name] = build_cover(item)
        self.commands = [item for item in document.items
                         if not isinstance(item, (LatticeBlock, CoverBlock))]
        for cmd in self.commands:
            if cmd.target not in names:
                raise DocumentError("command refers to unknown name %r"
                                    % cmd.target)
        for cmd in self.commands:
            if isinstance(cmd, DeriveCommand):
                if cmd.target not in self.covers:
                    raise DocumentError("derive needs a cover, %r is a "
                                        "lattice" % cmd.target)
                p, _pos = self.covers[cmd.target]
                base = set(p.base)
                for w in (cmd.element,) + cmd.cover:
                    if w not in base:
                        raise DocumentError("derive mentions unknown base "
                                            "element %r" % (w,))
            if isinstance(cmd, (BooleanizeCommand, CongruencesCommand,
                                EnvelopeCommand)):
                if cmd.target not in self.lattices:
                    raise DocumentError("%s needs a lattice, %r is a cover"
                                        % (type(cmd).__name__.replace(
                                            "Command", "").lower(),
                                           cmd.target))

    def run_all(self):
        """Returns (lines, records, all_ok)."""
        lines = []
        records = []
        all_ok = True
        for cmd in self.commands:
            if isinstance(cmd, CheckCommand):
                ok = self.run_check(cmd, lines, records)
            elif isinstance(cmd, BooleanizeCommand):
                ok = self.run_booleanize(cmd, lines, records)
            elif isinstance(cmd, CongruencesCommand):
                ok = self.run_congruences(cmd, lines, records)
            elif isinstance(cmd, DeriveCommand):
                ok = self.run_derive(cmd, lines, records)
            else:
                ok = self.run_envelope(cmd, lines, records)
            all_ok = all_ok and ok
        return lines, records, all_ok

    def need_pos(self, cmd, what):
        if cmd.target in self.lattices:
            pos = self.lattices[cmd.target][1]
        else:
            pos = self.covers[cmd.target][1]
        if pos is None:
            raise DocumentError("%s %s needs a pos field on %r"
                                % (what, cmd.target, cmd.target))
        return pos

    def run_check(self, cmd, lines, records):
        name, aspect = cmd.target, cmd.aspect
        record = {"command": "check", "target": name, "aspect": aspect}
        if aspect == "lattice":
            if name not in self.lattices:
                raise DocumentError("check %s lattice: %r is a cover"
                                    % (name, name))
            lattice, _pos = self.lattices[name]
            text = "pass (%d elements)" % len(lattice)
            record.update(ok=True, detail="%d elements" % len(lattice),
                          witnesses=[])
            lines.append("check %s lattice: %s" % (name, text))
            records.append(record)
            return True
        if aspect == "overt":
            pos = self.need_pos(cmd, "check")
            if name in self.lattices:
                report = check_overt(self.lattices[name][0], pos)
            else:
                report = check_overt_cover(self.covers[name][0], pos)
            text, report = _report_result(report)
            record.update(ok=report.ok, detail=report.detail,
                          witnesses=_json_safe(report.witnesses))
            lines.append("check %s overt: %s" % (name, text))
            records.append(record)
            return report.ok
        if aspect == "formalcover":
            if name not in self.covers:
                raise DocumentError("check %s formalcover: %r is a lattice"
                                    % (name, name))
            report = check_formal_cover_axioms(self.covers[name][0])
            text, report = _report_result(report)
            record.update(ok=report.ok, detail=report.detail,
                          witnesses=_json_safe(report.witnesses))
            lines.append("check %s formalcover: %s" % (name, text))
            records.append(record)
            return report.ok
        pos = self.need_pos(cmd, "check")
        if name in self.lattices:
            try:
                ok, witness = is_sigma_overlap_algebra(
                    self.lattices[name][0], pos)
                detail = ("sigma-overlap algebra" if ok
                          else "not a sigma-overlap algebra")
            except ValueError as err:
                ok, witness, detail = False, None, str(err)
        else:
            try:
                ok, witness = is_overlap_cover(self.covers[name][0], pos)
                detail = "overlap cover" if ok else "not an overlap cover"
            except CoverError as err:
                ok, witness, detail = False, None, str(err)
        witnesses = (witness,) if witness is not None else ()
        text, _ = _report_result(CheckReport(ok, detail, witnesses))
        record.update(ok=ok, detail=detail, witnesses=_json_safe(witnesses))
        lines.append("check %s overlap: %s" % (name, text))
        records.append(record)
        return ok

    def run_booleanize(self, cmd, lines, records):
        name = cmd.target
        lattice, _pos = self.lattices[name]
        pos = self.need_pos(cmd, "booleanize")
        record = {"command": "booleanize", "target": name}
        try:
            c = bool_congruence(lattice, pos)
            quotient_lattice, _projection, inherited = quotient(
                lattice, c, pos)
            overlap_after, _w = is_sigma_overlap_algebra(
                quotient_lattice, inherited)
        except (ValueError, RepresentativeDependentPos) as err:
            lines.append("booleanize %s: FAIL (%s)" % (name, err))
            record.update(ok=False, detail=str(err), classes=[],
                          identity=False, overlap_after=False)
            records.append(record)
            return False
        identity = c.class_count() == len(lattice)
        if identity:
            head = ("identity congruence (%d classes)" % c.class_count())
        else:
            head = "%d classes" % c.class_count()
        if overlap_after:
            tail = ("already a sigma-overlap algebra" if identity
                    else "quotient is a sigma-overlap algebra")
        else:
            tail = "quotient is NOT a sigma-overlap algebra"
        lines.append("booleanize %s: %s; %s" % (name, head, tail))
        for i, cls in enumerate(c.classes()):
            lines.append("  class %d: %s" % (i, " ".join(cls)))
        record.update(ok=overlap_after, detail=tail,
                      classes=_json_safe(c.classes()), identity=identity,
                      overlap_after=overlap_after)
        records.append(record)
        return overlap_after

    def run_congruences(self, cmd, lines, records):
        name = cmd.target
        lattice, _pos = self.lattices[name]
        try:
            family = enumerate_congruences(lattice)
        except SizeCapExceeded as err:
            raise DocumentError("congruences %s: %s" % (name, err))
        lines.append("congruences %s: %d congruences" % (name, len(family)))
        for c in family:
            lines.append("  %s" % " ".join(
                "[%s]" % " ".join(cls) for cls in c.classes()))
        records.append({
            "command": "congruences", "target": name, "ok": True,
            "count": len(family),
            "congruences": [_json_safe(c.classes()) for c in family],
        })
        return True

    def run_derive(self, cmd, lines, records):
        p, _pos = self.covers[cmd.target]
        budget = cmd.budget if cmd.budget is not None else self.budget_default
        sd = derive(p, cmd.element, cmd.cover)
        res = sd.probe(budget)
        header = "derive %s %s <|%s budget %d" % (
            cmd.target, cmd.element, _word_list(cmd.cover), budget)
        record = {"command": "derive", "target": cmd.target,
                  "element": cmd.element, "cover": list(cmd.cover),
                  "budget": budget}
        if isinstance(res, Confirmed):
            lines.append("%s: confirmed at step %d" % (header, res.at_step))
            trace = derive_with_trace(p, cmd.element, cmd.cover, res.at_step)
            trace_lines = []
            _trace_lines(trace, 1, trace_lines)
            lines.extend(trace_lines)
            record.update(ok=True, result="confirmed", at_step=res.at_step,
                          trace=_json_safe(trace))
            records.append(record)
            return True
        lines.append("%s: unknown (budget exhausted)" % header)
        record.update(ok=False, result="unknown", at_step=None, trace=None)
        records.append(record)
        return False

    def run_envelope(self, cmd, lines, records):
        name = cmd.target
        lattice, _pos = self.lattices[name]
        record = {"command": "envelope", "target": name}
        try:
            p, _embedding = envelope_cover(lattice)
            frame = frame_of_presentation(p, max_base=self.max_base)
        except BaseTooLarge as err:
            raise DocumentError("envelope %s: %s" % (name, err))
        iso = find_isomorphism(frame, lattice) is not None
        lines.append("envelope %s: %d axioms; frame has %d elements; "
                     "isomorphic to source: %s"
                     % (name, len(p.axioms), len(frame),
                        "yes" if iso else "no"))
        record.update(ok=iso, axioms=len(p.axioms), frame_size=len(frame),
                      isomorphic=iso)
        records.append(record)
        return iso


def run_document(text, budget=1000, max_base=15):
    """Parse and execute; returns (lines, records, exit_code)."""
    document = parse(text)
    runner = _Runner(document, budget, max_base)
    lines, records, all_ok = runner.run_all()
    return lines, records, 0 if all_ok else 1


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="sigmaloc",
        description="Check lattice and cover declarations: overtness, "
                    "overlap laws, cover laws, derivations, "
                    "Booleanization, congruence lists, envelopes.")
    parser.add_argument("--input", required=True,
                        help="input file ('-' for stdin)")
    parser.add_argument("--format", choices=("text", "records"),
                        default="text",
                        help="text lines or one JSON record per command")
    parser.add_argument("--budget", type=int, default=1000,
                        help="default probe budget for derive commands")
    parser.add_argument("--max-base", type=int, default=15,
                        help="largest base size for envelope frames")
    args = parser.parse_args(argv)
    try:
        if args.input == "-":
            text = sys.stdin.read()
        else:
            with open(args.input, "r") as handle:
                text = handle.read()
    except OSError as err:
        print("cannot read %s: %s" % (args.input, err), file=sys.stderr)
        return 2
    try:
        lines, records, code = run_document(text, budget=args.budget,
                                            max_base=args.max_base)
    except (ParseError, DocumentError) as err:
        print("%s: %s" % (args.input, err), file=sys.stderr)
        return 2
    if args.format == "text":
        for line in lines:
            print(line)
    else:
        for record in records:
            print(json.dumps(record, sort_keys=True))
    return code


if __name__ == "__main__":
    sys.exit(main())
