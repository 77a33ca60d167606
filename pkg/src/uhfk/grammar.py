"""Parsers for the group-spec and gset-spec mini-languages.

    group := "cyclic" INT | "symmetric" INT | "dihedral" INT
           | "product" group group | "perm" INT "{" cycles ("," cycles)* "}"
    gset  := "trivial" INT | "regular" | "coset" "{" cycles ("," cycles)* "}"
           | "union" gset gset
    cycles := cycle+ ;  cycle := "(" INT+ ")"

Either sub-spec of ``product``/``union`` may be wrapped in parentheses.
Points are 0-based. Inside a cycle, whitespace separates points; a cycle
written without whitespace, such as ``(012)``, is read one digit per point.
"""
import re
from dataclasses import dataclass

from .errors import ParseError

_TOKEN = re.compile(r"\s*(?:([A-Za-z_]+)|(\d+)|([(){},])|(\S))")


@dataclass(frozen=True)
class Tok:
    kind: str  # "word" | "int" | "punct"
    text: str
    pos: int
    space_before: bool


def tokenize(text):
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        if m.group(4) is not None:
            raise ParseError(f"unexpected character {m.group(4)!r} at {m.start(4)}", m.group(4))
        space = m.start(m.lastindex) > pos
        if m.group(1):
            toks.append(Tok("word", m.group(1), m.start(1), space))
        elif m.group(2):
            toks.append(Tok("int", m.group(2), m.start(2), space))
        elif m.group(3):
            toks.append(Tok("punct", m.group(3), m.start(3), space))
        pos = m.end()
    return toks


class _Stream:
    def __init__(self, text):
        self.text = text
        self.toks = tokenize(text)
        self.i = 0

    def peek(self, ahead=0):
        j = self.i + ahead
        return self.toks[j] if j < len(self.toks) else None

    def next(self, what):
        tok = self.peek()
        if tok is None:
            raise ParseError(f"unexpected end of input in {self.text!r}, expected {what}", "<end>")
        self.i += 1
        return tok

    def expect(self, text):
        tok = self.next(repr(text))
        if tok.text != text:
            raise ParseError(f"expected {text!r} but found {tok.text!r} at {tok.pos}", tok.text)
        return tok

    def integer(self):
        tok = self.next("an integer")
        if tok.kind != "int":
            raise ParseError(f"expected an integer but found {tok.text!r} at {tok.pos}", tok.text)
        return int(tok.text)

    def done(self):
        tok = self.peek()
        if tok is not None:
            raise ParseError(f"unexpected trailing token {tok.text!r} at {tok.pos}", tok.text)


def _cycle(st):
    st.expect("(")
    ints = []
    while True:
        tok = st.next("a point or ')'")
        if tok.text == ")":
            break
        if tok.kind != "int":
            raise ParseError(f"expected a point but found {tok.text!r} at {tok.pos}", tok.text)
        ints.append(tok)
    if not ints:
        raise ParseError(f"empty cycle in {st.text!r}", "()")
    if len(ints) == 1 and len(ints[0].text) > 1:
        return tuple(int(c) for c in ints[0].text)
    return tuple(int(t.text) for t in ints)


def _cycles(st):
    cyc = [_cycle(st)]
    while (tok := st.peek()) is not None and tok.text == "(":
        cyc.append(_cycle(st))
    return tuple(cyc)


def _cycle_list(st):
    st.expect("{")
    perms = [_cycles(st)]
    while True:
        tok = st.next("',' or '}'")
        if tok.text == "}":
            return tuple(perms)
        if tok.text != ",":
            raise ParseError(f"expected ',' or '}}' but found {tok.text!r} at {tok.pos}", tok.text)
        perms.append(_cycles(st))


def _sub(st, parse_one):
    tok = st.peek()
    nxt = st.peek(1)
    if tok is not None and tok.text == "(" and nxt is not None and nxt.kind == "word":
        st.next("(")
        node = parse_one(st)
        st.expect(")")
        return node
    return parse_one(st)


def _group(st):
    tok = st.next("a group spec")
    word = tok.text.lower()
    if word in ("cyclic", "symmetric", "dihedral"):
        n = st.integer()
        if n < 1:
            raise ParseError(f"{word} needs a positive size, got {n}", str(n))
        if word == "dihedral" and n < 3:
            raise ParseError(f"dihedral needs at least 3 points, got {n}", str(n))
        return (word, n)
    if word == "product":
        return ("product", _sub(st, _group), _sub(st, _group))
    if word == "perm":
        degree = st.integer()
        if degree < 1:
            raise ParseError(f"perm needs a positive degree, got {degree}", str(degree))
        return ("perm", degree, _cycle_list(st))
    raise ParseError(f"unknown group family {tok.text!r} at {tok.pos}", tok.text)


def _gset(st):
    tok = st.next("a gset spec")
    word = tok.text.lower()
    if word == "trivial":
        return ("trivial", st.integer())
    if word == "regular":
        return ("regular",)
    if word == "coset":
        return ("coset", _cycle_list(st))
    if word == "union":
        return ("union", _sub(st, _gset), _sub(st, _gset))
    raise ParseError(f"unknown gset constructor {tok.text!r} at {tok.pos}", tok.text)


def parse_group_spec(text):
    st = _Stream(text)
    node = _sub(st, _group)
    st.done()
    return node


def parse_gset_spec(text):
    st = _Stream(text)
    node = _sub(st, _gset)
    st.done()
    return node


def cycles_to_perm(cycles, degree):
    """Image array of a product of cycles, composed right to left."""
    perm = list(range(degree))
    for cyc in reversed(cycles):
        if len(set(cyc)) != len(cyc):
            raise ParseError(f"cycle {cyc} repeats a point", str(cyc))
        for p in cyc:
            if p >= degree:
                raise ParseError(f"point {p} out of range for degree {degree}", str(p))
        step = {cyc[i]: cyc[(i + 1) % len(cyc)] for i in range(len(cyc))}
        # apply cyc after the permutation built so far
        perm = [step.get(x, x) for x in perm]
    return tuple(perm)


def format_cycles(perm):
    """Cycle notation for an image array; the identity prints as ``()``."""
    seen = set()
    parts = []
    for start in range(len(perm)):
        if start in seen or perm[start] == start:
            continue
        cyc = [start]
        seen.add(start)
        x = perm[start]
        while x != start:
            cyc.append(x)
            seen.add(x)
            x = perm[x]
        parts.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(parts) or "()"
