"""Text format for quiver and generalized-path-algebra files.

A file is either one ``gamma { ... }`` block plus any number of
``algebra <vertex> { ... }`` blocks, or a single ``quiver { ... }`` block.
Inside a block::

    vertices: a b c
    arrow f: a -> b
    relations: f*g, g*h

Identifiers match ``[A-Za-z0-9_.]+``; ``#`` starts a comment; statements
end at the end of the line.  Relations compose left to right and need at
least two arrows.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .gp import GPAlgebra, OrdinaryQuiver, TYPE_I, TYPE_II
from .quiver import Arrow, BoundQuiver, MonomialIdeal, Path, Quiver

IDENT_RE = re.compile(r"[A-Za-z0-9_.]+")


class ParseError(ValueError):
    def __init__(self, message: str, line: int, col: int):
        self.line = line
        self.col = col
        super().__init__(f"{line}:{col}: {message}")


@dataclass(frozen=True)
class _Token:
    kind: str  # IDENT LBRACE RBRACE COLON ARROW STAR COMMA NL EOF
    value: str
    line: int
    col: int


_PUNCT = {"{": "LBRACE", "}": "RBRACE", ":": "COLON", "*": "STAR", ",": "COMMA"}


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    for lineno, line in enumerate(text.split("\n"), start=1):
        i = 0
        n = len(line)
        while i < n:
            ch = line[i]
            if ch == "#":
                break
            if ch in " \t\r":
                i += 1
                continue
            if ch in _PUNCT:
                tokens.append(_Token(_PUNCT[ch], ch, lineno, i + 1))
                i += 1
                continue
            if line.startswith("->", i):
                tokens.append(_Token("ARROW", "->", lineno, i + 1))
                i += 2
                continue
            m = IDENT_RE.match(line, i)
            if m:
                tokens.append(_Token("IDENT", m.group(), lineno, i + 1))
                i = m.end()
                continue
            raise ParseError(f"unexpected character {ch!r}", lineno, i + 1)
        tokens.append(_Token("NL", "", lineno, n + 1))
    tokens.append(_Token("EOF", "", text.count("\n") + 2, 1))
    return tokens


@dataclass
class _Block:
    kind: str  # "gamma" | "quiver" | "algebra"
    name: str | None
    token: _Token
    vertices: list[_Token]
    arrows: list[tuple[_Token, _Token, _Token]]  # name, source, target
    relations: list[list[_Token]]


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        if tok.kind != "EOF":
            self.pos += 1
        return tok

    def expect(self, kind: str, what: str) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            shown = tok.value or tok.kind.lower()
            raise ParseError(f"expected {what}, found {shown!r}", tok.line, tok.col)
        return self.advance()

    def skip_newlines(self) -> None:
        while self.peek().kind == "NL":
            self.advance()

    def end_of_statement(self) -> None:
        tok = self.peek()
        if tok.kind == "NL":
            self.advance()
        elif tok.kind != "RBRACE":
            raise ParseError(f"expected end of line, found {tok.value!r}", tok.line, tok.col)

    def parse_blocks(self) -> list[_Block]:
        blocks: list[_Block] = []
        self.skip_newlines()
        if self.peek().kind == "EOF":
            tok = self.peek()
            raise ParseError("empty input: expected a block", tok.line, tok.col)
        while self.peek().kind != "EOF":
            blocks.append(self.parse_block())
            self.skip_newlines()
        return blocks

    def parse_block(self) -> _Block:
        head = self.expect("IDENT", "'gamma', 'quiver' or 'algebra'")
        if head.value not in ("gamma", "quiver", "algebra"):
            raise ParseError(
                f"expected 'gamma', 'quiver' or 'algebra', found {head.value!r}",
                head.line,
                head.col,
            )
        name = None
        if head.value == "algebra":
            name = self.expect("IDENT", "a vertex id after 'algebra'").value
        self.expect("LBRACE", "'{'")
        block = _Block(head.value, name, head, [], [], [])
        while True:
            self.skip_newlines()
            tok = self.peek()
            if tok.kind == "RBRACE":
                self.advance()
                break
            if tok.kind == "EOF":
                raise ParseError("unterminated block: expected '}'", tok.line, tok.col)
            self.parse_statement(block)
        return block

    def parse_statement(self, block: _Block) -> None:
        kw = self.expect("IDENT", "'vertices', 'arrow' or 'relations'")
        if kw.value == "vertices":
            self.expect("COLON", "':' after 'vertices'")
            got = False
            while self.peek().kind == "IDENT":
                block.vertices.append(self.advance())
                got = True
            if not got:
                tok = self.peek()
                raise ParseError("expected at least one vertex id", tok.line, tok.col)
            self.end_of_statement()
        elif kw.value == "arrow":
            name = self.expect("IDENT", "an arrow id")
            self.expect("COLON", "':' after the arrow id")
            source = self.expect("IDENT", "a source vertex")
            self.expect("ARROW", "'->'")
            target = self.expect("IDENT", "a target vertex")
            block.arrows.append((name, source, target))
            self.end_of_statement()
        elif kw.value == "relations":
            if block.kind == "gamma":
                raise ParseError("relations are not allowed in a gamma block", kw.line, kw.col)
            self.expect("COLON", "':' after 'relations'")
            while True:
                block.relations.append(self.parse_relation())
                if self.peek().kind == "COMMA":
                    self.advance()
                    continue
                break
            self.end_of_statement()
        else:
            raise ParseError(
                f"expected 'vertices', 'arrow' or 'relations', found {kw.value!r}",
                kw.line,
                kw.col,
            )

    def parse_relation(self) -> list[_Token]:
        ids = [self.expect("IDENT", "an arrow id in a relation")]
        self.expect("STAR", "'*' (a relation needs at least two arrows)")
        ids.append(self.expect("IDENT", "an arrow id after '*'"))
        while self.peek().kind == "STAR":
            self.advance()
            ids.append(self.expect("IDENT", "an arrow id after '*'"))
        return ids


def _build_quiver(block: _Block) -> tuple[Quiver, MonomialIdeal]:
    vertices: list[str] = []
    seen_v: set[str] = set()
    for tok in block.vertices:
        if tok.value in seen_v:
            raise ParseError(f"duplicate vertex id {tok.value!r}", tok.line, tok.col)
        seen_v.add(tok.value)
        vertices.append(tok.value)
    arrows: list[Arrow] = []
    by_name: dict[str, Arrow] = {}
    for name, source, target in block.arrows:
        if name.value in by_name:
            raise ParseError(f"duplicate arrow id {name.value!r}", name.line, name.col)
        for tok in (source, target):
            if tok.value not in seen_v:
                raise ParseError(f"unknown vertex {tok.value!r}", tok.line, tok.col)
        arrow = Arrow(name.value, source.value, target.value)
        by_name[name.value] = arrow
        arrows.append(arrow)
    generators: list[Path] = []
    for rel in block.relations:
        arrs = []
        for tok in rel:
            if tok.value not in by_name:
                raise ParseError(f"unknown arrow {tok.value!r}", tok.line, tok.col)
            arrs.append(by_name[tok.value])
        for a, b in zip(arrs, arrs[1:]):
            if a.target != b.source:
                tok = rel[0]
                raise ParseError(
                    f"arrows {a.name!r} and {b.name!r} do not compose", tok.line, tok.col
                )
        generators.append(Path.of(arrs))
    return Quiver.of(vertices, arrows), MonomialIdeal.of(generators)


def parse(text: str) -> GPAlgebra | BoundQuiver:
    """Parse a gamma file to a ``GPAlgebra`` or a quiver file to a ``BoundQuiver``."""
    blocks = _Parser(text).parse_blocks()
    kinds = [b.kind for b in blocks]
    if "quiver" in kinds:
        if len(blocks) != 1:
            extra = blocks[1]
            raise ParseError(
                "a quiver file holds exactly one block", extra.token.line, extra.token.col
            )
        quiver, ideal = _build_quiver(blocks[0])
        return BoundQuiver(quiver, ideal)
    gammas = [b for b in blocks if b.kind == "gamma"]
    if not gammas:
        tok = blocks[0].token
        raise ParseError("expected a 'gamma' or 'quiver' block", tok.line, tok.col)
    if len(gammas) > 1:
        tok = gammas[1].token
        raise ParseError("duplicate gamma block", tok.line, tok.col)
    gamma_quiver, _ = _build_quiver(gammas[0])
    algebras: dict[str, BoundQuiver] = {}
    for b in blocks:
        if b.kind != "algebra":
            continue
        assert b.name is not None
        if b.name not in gamma_quiver.vertices:
            raise ParseError(
                f"algebra block names undeclared gamma vertex {b.name!r}",
                b.token.line,
                b.token.col,
            )
        if b.name in algebras:
            raise ParseError(f"duplicate algebra block for {b.name!r}", b.token.line, b.token.col)
        quiver, ideal = _build_quiver(b)
        algebras[b.name] = BoundQuiver(quiver, ideal)
    return GPAlgebra.of(gamma_quiver, algebras)


def parse_gp(text: str) -> GPAlgebra:
    doc = parse(text)
    if not isinstance(doc, GPAlgebra):
        raise ParseError("expected a gamma file, found a quiver file", 1, 1)
    return doc


def parse_quiver_file(text: str) -> BoundQuiver:
    doc = parse(text)
    if not isinstance(doc, BoundQuiver):
        raise ParseError("expected a quiver file, found a gamma file", 1, 1)
    return doc


def _check_id(value: str) -> str:
    if not IDENT_RE.fullmatch(value):
        raise ValueError(f"id {value!r} cannot be rendered in the text format")
    return value


def _render_block(
    header: str,
    quiver: Quiver,
    ideal: MonomialIdeal,
    arrow_note=None,
) -> str:
    lines = [f"{header} {{"]
    lines.append("  vertices: " + " ".join(_check_id(v) for v in quiver.vertices))
    for a in quiver.arrows:
        note = f"  # {arrow_note(a)}" if arrow_note else ""
        lines.append(
            f"  arrow {_check_id(a.name)}: {_check_id(a.source)} -> {_check_id(a.target)}{note}"
        )
    if ideal.generators:
        lines.append("  relations: " + ", ".join("*".join(g.word) for g in ideal.generators))
    lines.append("}")
    return "\n".join(lines) + "\n"


def render_bound_quiver(bq: BoundQuiver) -> str:
    return _render_block("quiver", bq.quiver, bq.ideal)


def render_gp(gp: GPAlgebra) -> str:
    parts = [_render_block("gamma", gp.gamma, MonomialIdeal())]
    for v in gp.gamma.vertices:
        if gp.is_trivial_at(v):
            continue
        bq = gp.algebra(v)
        parts.append(_render_block(f"algebra {_check_id(v)}", bq.quiver, bq.ideal))
    return "\n".join(parts)


def render_expansion(oq: OrdinaryQuiver) -> str:
    """The expansion as a quiver block, arrows annotated typeI / typeII."""
    note = lambda a: "typeI" if oq.arrow_kind[a.name] == TYPE_I else "typeII"
    return _render_block("quiver", oq.quiver, oq.lifted_ideal, arrow_note=note)


def render_dot(oq: OrdinaryQuiver) -> str:
    """DOT export: one cluster per gamma block, type II arrows in blue."""
    relations = ", ".join("*".join(g.word) for g in oq.lifted_ideal.generators)
    lines = ["digraph expansion {"]
    lines.append(f'  label="relations: {relations or "none"}";')
    blocks: dict[str, list[str]] = {}
    for v in oq.quiver.vertices:
        blocks.setdefault(oq.block_of(v), []).append(v)
    for block, verts in blocks.items():
        lines.append(f'  subgraph "cluster_{block}" {{')
        lines.append(f'    label="{block}";')
        for v in verts:
            lines.append(f'    "{v}";')
        lines.append("  }")
    for a in oq.quiver.arrows:
        if oq.arrow_kind[a.name] == TYPE_I:
            attrs = 'style=solid color=black'
        else:
            attrs = 'color=blue'
        lines.append(f'  "{a.source}" -> "{a.target}" [label="{a.name}" {attrs}];')
    lines.append("}")
    return "\n".join(lines) + "\n"
