"""Regular expression AST over bit-string literals.

Grammar::

    reg := EMPTY | (w) | (reg|reg) | (reg)* | (reg)(reg)

Literals hold whole words, possibly empty.  Two text forms exist: the fully
parenthesized notation used in print (``to_text``/``parse_text``) and a
nested dict form for machine consumption (``to_tree``/``from_tree``).
"""

from __future__ import annotations

from dataclasses import dataclass

from .bitstring import check_bits

EMPTY_SYMBOL = "∅"


class Regex:
    __slots__ = ()


@dataclass(frozen=True)
class Empty(Regex):
    """The empty language."""


@dataclass(frozen=True)
class Literal(Regex):
    word: str

    def __post_init__(self):
        check_bits(self.word)


@dataclass(frozen=True)
class Alt(Regex):
    children: tuple[Regex, ...]


@dataclass(frozen=True)
class Concat(Regex):
    children: tuple[Regex, ...]


@dataclass(frozen=True)
class Star(Regex):
    child: Regex


def concat(*parts: Regex) -> Regex:
    return parts[0] if len(parts) == 1 else Concat(tuple(parts))


# -- text notation ---------------------------------------------------------


def iter_text(r: Regex):
    """Yield the text notation of ``r`` in chunks (large expressions stream)."""
    if isinstance(r, Empty):
        yield EMPTY_SYMBOL
    elif isinstance(r, Literal):
        yield f"({r.word})"
    elif isinstance(r, Star):
        if isinstance(r.child, Literal):
            yield from iter_text(r.child)
        else:
            yield "("
            yield from iter_text(r.child)
            yield ")"
        yield "*"
    elif isinstance(r, Alt):
        yield "("
        for i, c in enumerate(r.children):
            if i:
                yield "|"
            if isinstance(c, (Literal, Empty)):
                yield from iter_text(c)
            else:
                yield "("
                yield from iter_text(c)
                yield ")"
        yield ")"
    elif isinstance(r, Concat):
        for i, c in enumerate(r.children):
            if isinstance(c, Concat) or (isinstance(c, Star) and i > 0):
                yield "("
                yield from iter_text(c)
                yield ")"
            else:
                yield from iter_text(c)
    else:
        raise TypeError(f"not a regex node: {r!r}")


def to_text(r: Regex) -> str:
    return "".join(iter_text(r))


class ParseError(ValueError):
    pass


class _Parser:
    def __init__(self, text: str):
        self.text = "".join(text.split())
        self.pos = 0

    def peek(self):
        return self.text[self.pos] if self.pos < len(self.text) else None

    def expect(self, ch):
        if self.peek() != ch:
            got = self.peek() or "end of input"
            raise ParseError(f"expected {ch!r} at offset {self.pos}, got {got!r}")
        self.pos += 1

    def parse(self) -> Regex:
        r = self.alt()
        if self.pos != len(self.text):
            raise ParseError(f"unexpected {self.peek()!r} at offset {self.pos}")
        return r

    def alt(self) -> Regex:
        branches = [self.seq()]
        while self.peek() == "|":
            self.pos += 1
            branches.append(self.seq())
        return branches[0] if len(branches) == 1 else Alt(tuple(branches))

    def seq(self) -> Regex:
        items = []
        while self.peek() not in (None, "|", ")"):
            items.extend(self.postfix())
        if not items:
            return Literal("")
        return concat(*items)

    def postfix(self) -> list[Regex]:
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            items = [self.alt()]
            self.expect(")")
        elif ch in ("0", "1"):
            start = self.pos
            while self.peek() in ("0", "1"):
                self.pos += 1
            word = self.text[start:self.pos]
            # a bare star binds to the last symbol only
            if self.peek() == "*" and len(word) > 1:
                items = [Literal(word[:-1]), Literal(word[-1])]
            else:
                items = [Literal(word)]
        elif ch == EMPTY_SYMBOL:
            self.pos += 1
            items = [Empty()]
        else:
            got = ch or "end of input"
            raise ParseError(f"unexpected {got!r} at offset {self.pos}")
        while self.peek() == "*":
            self.pos += 1
            items[-1] = Star(items[-1])
        return items


def parse_text(text: str) -> Regex:
    """Parse text notation (whitespace is ignored)."""
    return _Parser(text).parse()


# -- structured form --------------------------------------------------------


def to_tree(r: Regex) -> dict:
    if isinstance(r, Empty):
        return {"kind": "empty"}
    if isinstance(r, Literal):
        return {"kind": "literal", "word": r.word}
    if isinstance(r, Star):
        return {"kind": "star", "child": to_tree(r.child)}
    if isinstance(r, Alt):
        return {"kind": "alt", "children": [to_tree(c) for c in r.children]}
    if isinstance(r, Concat):
        return {"kind": "concat", "children": [to_tree(c) for c in r.children]}
    raise TypeError(f"not a regex node: {r!r}")


def from_tree(d: dict) -> Regex:
    kind = d.get("kind")
    if kind == "empty":
        return Empty()
    if kind == "literal":
        return Literal(d["word"])
    if kind == "star":
        return Star(from_tree(d["child"]))
    if kind == "alt":
        return Alt(tuple(from_tree(c) for c in d["children"]))
    if kind == "concat":
        return Concat(tuple(from_tree(c) for c in d["children"]))
    raise ValueError(f"unknown node kind {kind!r}")
