"""Expression language for manifolds, bundles and partitions.

    manifold  := "CP" "(" nat ")" { "*" manifold } | "pt"
    bundle    := term { "+" term }
    term      := "O" "(" int {"," int} ")" | "tau" | "nu" | "conj" "(" bundle ")"
    partition := [basis] "[" nat {"," nat} "]"      basis in m, h, e, p

Whitespace is insignificant.  Every node prints in a canonical form that
parses back to an equal node.
"""

from dataclasses import dataclass
import re

from .geommodel import Bundle, ProjProduct
from .symfunc import Partition

DEFAULT_MAX_DIM = 8


class ParseError(ValueError):
    """Syntax or range error; ``offset`` is a byte offset into the UTF-8 input."""

    def __init__(self, message, text="", offset=0):
        self.offset = len(text[:offset].encode("utf-8")) if text else offset
        self.text = text
        super().__init__(f"{message} (at byte {self.offset})")


class BoundError(ParseError):
    pass


@dataclass(frozen=True)
class ManifoldExpr:
    dims: tuple

    def __str__(self):
        return "*".join(f"CP({d})" for d in self.dims) or "pt"

    def model(self):
        return ProjProduct(self.dims)


@dataclass(frozen=True)
class LineExpr:
    vector: tuple

    def __str__(self):
        return "O(" + ",".join(map(str, self.vector)) + ")"

    def resolve(self, model):
        vec = self.vector
        if len(vec) != model.rank:
            raise ParseError(f"{self} has {len(vec)} entries but {model} has {model.rank} factors")
        return Bundle.line(vec)


@dataclass(frozen=True)
class TauExpr:
    def __str__(self):
        return "tau"

    def resolve(self, model):
        return Bundle.tangent(model)


@dataclass(frozen=True)
class NuExpr:
    def __str__(self):
        return "nu"

    def resolve(self, model):
        return Bundle.normal(model)


@dataclass(frozen=True)
class ConjExpr:
    inner: object

    def __str__(self):
        return f"conj({self.inner})"

    def resolve(self, model):
        return self.inner.resolve(model).conj()


@dataclass(frozen=True)
class SumExpr:
    terms: tuple

    def __str__(self):
        return " + ".join(map(str, self.terms))

    def resolve(self, model):
        out = Bundle.zero()
        for t in self.terms:
            out = out + t.resolve(model)
        return out


@dataclass(frozen=True)
class PartitionExpr:
    parts: tuple
    basis: str = "m"

    def __str__(self):
        prefix = "" if self.basis == "m" else self.basis
        return prefix + "[" + ",".join(map(str, self.parts)) + "]"

    @property
    def partition(self):
        return Partition(self.parts)


_TOKEN = re.compile(r"\s*(?:(?P<int>-?\d+)|(?P<name>[A-Za-z_]+)|(?P<sym>[()\[\],*+]))")


class _Parser:
    def __init__(self, text, max_dim=DEFAULT_MAX_DIM):
        self.text = text
        self.max_dim = max_dim
        self.tokens = []
        pos = 0
        while pos < len(text):
            while pos < len(text) and text[pos].isspace():
                pos += 1
            if pos == len(text):
                break
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                raise ParseError(f"unexpected character {text[pos]!r}", text, pos)
            kind = m.lastgroup
            self.tokens.append((kind, m.group(kind), m.start(kind)))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None, len(self.text))

    def take(self, value=None, kind=None):
        tok = self.peek()
        if tok[0] is None:
            raise ParseError(f"unexpected end of input, expected {value or kind}", self.text,
                             len(self.text))
        if (value is not None and tok[1] != value) or (kind is not None and tok[0] != kind):
            raise ParseError(f"expected {value or kind}, found {tok[1]!r}", self.text, tok[2])
        self.i += 1
        return tok

    def done(self):
        tok = self.peek()
        if tok[0] is not None:
            raise ParseError(f"trailing input {tok[1]!r}", self.text, tok[2])

    def nat(self):
        tok = self.take(kind="int")
        value = int(tok[1])
        if value < 0:
            raise ParseError(f"expected a natural number, found {value}", self.text, tok[2])
        return value

    def manifold(self):
        tok = self.peek()
        if tok[1] == "pt":
            self.take("pt")
            return ManifoldExpr(())
        dims = []
        while True:
            self.take("CP")
            self.take("(")
            dims.append(self.nat())
            self.take(")")
            if self.peek()[1] != "*":
                break
            self.take("*")
            if self.peek()[1] == "pt":
                self.take("pt")
                break
        if sum(dims) > self.max_dim:
            raise BoundError(f"complex dimension {sum(dims)} exceeds bound {self.max_dim}",
                             self.text, tok[2])
        return ManifoldExpr(tuple(dims))

    def bundle(self):
        terms = [self.term()]
        while self.peek()[1] == "+":
            self.take("+")
            terms.append(self.term())
        return terms[0] if len(terms) == 1 else SumExpr(tuple(terms))

    def term(self):
        tok = self.peek()
        if tok[1] == "tau":
            self.take()
            return TauExpr()
        if tok[1] == "nu":
            self.take()
            return NuExpr()
        if tok[1] == "conj":
            self.take()
            self.take("(")
            inner = self.bundle()
            self.take(")")
            return ConjExpr(inner)
        if tok[1] == "O":
            self.take()
            self.take("(")
            vec = [int(self.take(kind="int")[1])]
            while self.peek()[1] == ",":
                self.take(",")
                vec.append(int(self.take(kind="int")[1]))
            self.take(")")
            return LineExpr(tuple(vec))
        raise ParseError(f"expected a bundle, found {tok[1]!r}", self.text, tok[2])

    def partition(self):
        basis = "m"
        tok = self.peek()
        if tok[0] == "name":
            if tok[1] not in ("m", "h", "e", "p"):
                raise ParseError(f"unknown basis {tok[1]!r}", self.text, tok[2])
            basis = self.take()[1]
        self.take("[")
        parts = [self.nat()]
        while self.peek()[1] == ",":
            self.take(",")
            parts.append(self.nat())
        self.take("]")
        if any(p == 0 for p in parts):
            raise ParseError("partition parts must be positive", self.text, tok[2])
        return PartitionExpr(tuple(sorted(parts, reverse=True)), basis)


def parse_manifold(text, max_dim=DEFAULT_MAX_DIM):
    p = _Parser(text, max_dim)
    out = p.manifold()
    p.done()
    return out


def parse_bundle(text):
    p = _Parser(text)
    out = p.bundle()
    p.done()
    return out


def parse_partition(text):
    p = _Parser(text)
    out = p.partition()
    p.done()
    return out


def parse(text, max_dim=DEFAULT_MAX_DIM):
    """Parse any of the three expression kinds, chosen by the leading token."""
    p = _Parser(text, max_dim)
    kind, value, _ = p.peek()
    if value in ("CP", "pt"):
        out = p.manifold()
    elif value == "[" or (kind == "name" and value in ("m", "h", "e", "p")):
        out = p.partition()
    else:
        out = p.bundle()
    p.done()
    return out


def resolve_bundle(expr, model, cobordism=False):
    """Bundle for ``model``; with cobordism=True reject lines other than O(+-e_i)."""
    try:
        bundle = expr.resolve(model)
    except ParseError as exc:
        raise ParseError(str(exc).rsplit(" (at byte", 1)[0], str(expr), 0) from None
    if cobordism and not bundle.is_cobordism_representable():
        raise ParseError(f"bundle {expr} is not representable in cobordism "
                         "(only O(+-e_i), tau, nu and their sums/conjugates)", str(expr), 0)
    return bundle
