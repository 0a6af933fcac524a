"""Parser for graph specs such as ``strong(cycle:4,h1)``.

Grammar::

    spec    := product | atom
    product := ("strong" | "cartesian") "(" spec "," spec ")"
    atom    := "file:" PATH | generator

Whitespace around tokens is ignored.  ``PATH`` runs up to the next ``,`` or
``)`` at the current nesting level, so paths containing those characters
cannot appear inside a product.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .errors import ParseError
from .graph import Graph, ProductGraph, cartesian_product, generate, parse_edge_list, strong_product

_COMBINATORS = ("strong", "cartesian")


@dataclass(frozen=True)
class Atom:
    text: str
    position: int


@dataclass(frozen=True)
class Product:
    kind: str
    left: "Node"
    right: "Node"


Node = Atom | Product


class _Parser:
    def __init__(self, text: str) -> None:
        self.text = text
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def expect(self, ch: str) -> None:
        self.skip_ws()
        if self.pos >= len(self.text) or self.text[self.pos] != ch:
            found = self.text[self.pos] if self.pos < len(self.text) else "end of input"
            raise ParseError(f"expected {ch!r}, found {found!r}", position=self.pos)
        self.pos += 1

    def node(self) -> Node:
        self.skip_ws()
        for kind in _COMBINATORS:
            end = self.pos + len(kind)
            if self.text.startswith(kind, self.pos):
                rest = self.text[end:].lstrip()
                if rest.startswith("("):
                    self.pos = end
                    self.expect("(")
                    left = self.node()
                    self.expect(",")
                    right = self.node()
                    self.expect(")")
                    return Product(kind, left, right)
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] not in ",()":
            self.pos += 1
        word = self.text[start:self.pos].strip()
        if not word:
            raise ParseError("expected a graph name", position=start)
        return Atom(word, start)

    def parse(self) -> Node:
        tree = self.node()
        self.skip_ws()
        if self.pos != len(self.text):
            raise ParseError(f"unexpected trailing text {self.text[self.pos:]!r}", position=self.pos)
        return tree


def parse_spec(text: str) -> Node:
    return _Parser(text).parse()


def _build_atom(atom: Atom) -> Graph:
    if atom.text.startswith("file:"):
        path = Path(atom.text[5:])
        try:
            data = path.read_bytes()
        except OSError as exc:
            raise ParseError(f"cannot read {str(path)!r}: {exc.strerror}", position=atom.position) from None
        return parse_edge_list(data)
    try:
        return generate(atom.text)
    except ParseError as exc:
        raise ParseError(str(exc), position=atom.position) from None


def build(node: Node) -> Graph | ProductGraph:
    if isinstance(node, Atom):
        return _build_atom(node)
    left, right = as_graph(build(node.left)), as_graph(build(node.right))
    if node.kind == "strong":
        return strong_product(left, right)
    return cartesian_product(left, right)


def as_graph(obj: Graph | ProductGraph) -> Graph:
    return obj.graph if isinstance(obj, ProductGraph) else obj


def load(text: str) -> Graph | ProductGraph:
    """Parse and build a spec; products come back as :class:`ProductGraph`."""
    return build(parse_spec(text))


def split_pair(text: str) -> tuple[str, str]:
    """Split ``"a,b"`` or ``"(g0,y1),(g1,y2)"`` at the single top-level comma."""
    depth = 0
    cut = None
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ParseError("unbalanced ')'", position=i)
        elif ch == "," and depth == 0:
            if cut is not None:
                raise ParseError("more than two vertices in edge selector", position=i)
            cut = i
    if depth != 0:
        raise ParseError("unbalanced '('", position=len(text))
    if cut is None:
        raise ParseError("edge selector needs two comma-separated vertices", position=0)
    return text[:cut].strip(), text[cut + 1:].strip()
