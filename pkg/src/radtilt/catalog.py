"""Builtin example algebras, module literals and instance loading."""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field

from .field import Field, field_from_spec
from .qalg import AlgebraError, BoundQuiverAlgebra, ParseError, algebra_from_json_text, parse_algebra
from .repmod import ModuleError, Representation, direct_sum, injective, projective, simple


@dataclass(frozen=True)
class Builtin:
    name: str
    text: str
    description: str
    tilting: tuple[str, ...] = ()
    chains: tuple[tuple[str, ...], ...] = field(default_factory=tuple)


_LINEAR4 = "vertices 1 2 3 4\narrow al 1 2\narrow be 2 3\narrow ga 3 4\n"
_LINEAR5 = "vertices 1 2 3 4 5\narrow al 1 2\narrow be 2 3\narrow ga 3 4\narrow de 4 5\n"

BUILTINS: dict[str, Builtin] = {
    b.name: b
    for b in [
        Builtin(
            "eje1a",
            _LINEAR4 + "relation ga*be*al\n",
            "linear A_4 bound by the path of length three",
            tilting=("P(1)+P(2)+P(3)+S(3)",),
        ),
        Builtin(
            "eje1b",
            "vertices 1 2 3 4\narrow al 1 2\narrow be 2 4\narrow de 1 3\narrow ga 3 4\nrelation be*al\nrelation ga*de\n",
            "square with both length-two paths killed",
            tilting=("I(4)+S(3)+S(2)+P(1)",),
        ),
        Builtin(
            "aprsix",
            "vertices 1 2 3 4 5 6\narrow al 4 2\narrow be 4 3\narrow ga 2 1\narrow de 3 1\narrow mu 5 1\narrow la 6 5\n"
            "relation ga*al - de*be\nrelation mu*la\n",
            "six vertices, one commutativity and one zero relation, APR tilt at the sink 1",
            tilting=("tau-(S(1))+P(2)+P(3)+P(4)+P(5)+P(6)",),
            chains=(("1",),),
        ),
        Builtin(
            "ejemplo1a",
            _LINEAR5 + "relation be*al\n",
            "linear A_5 with one zero relation; iterated tilted of type A_5",
            chains=(("5", "4", "3", "5", "4", "5"),),
        ),
        Builtin(
            "ejemplo1b",
            _LINEAR5 + "relation be*al\nrelation de*ga\n",
            "linear A_5 with two zero relations; iterated tilted of type A_5",
            chains=(("5", "4", "5", "3", "4", "5", "4"),),
        ),
        Builtin(
            "a4cx",
            _LINEAR4,
            "hereditary linear A_4 with a tilting module whose transport fails across the torsion pair",
            tilting=("P(1)+I(3)+tau-(P(3))+S(3)",),
        ),
        Builtin("one_vertex", "vertices 1\n", "the ground field"),
        Builtin("a2", "vertices 1 2\narrow al 1 2\n", "A_2 with one arrow", tilting=("P(1)+tau-(S(2))",), chains=(("2",),)),
    ]
}


def builtin(name: str, field: Field | None = None) -> BoundQuiverAlgebra:
    try:
        b = BUILTINS[name]
    except KeyError:
        raise AlgebraError(f"unknown builtin {name!r}; known: {', '.join(sorted(BUILTINS))}") from None
    return parse_algebra(b.text, field=field, name=name)


def load_algebra(ref: str, field: Field | str | None = None) -> BoundQuiverAlgebra:
    """A builtin name, or a path to an algebra file (text grammar or JSON)."""
    if isinstance(field, str):
        field = field_from_spec(field)
    if ref in BUILTINS and not os.path.exists(ref):
        return builtin(ref, field)
    try:
        with open(ref, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise AlgebraError(f"cannot read {ref}: {exc.strerror}") from None
    name = os.path.splitext(os.path.basename(ref))[0]
    if text.lstrip().startswith("{"):
        A = algebra_from_json_text(text)
        return A.with_field(field) if field is not None else A
    return parse_algebra(text, field=field, name=name)


# --------------------------------------------------------------------------
# module literals


class _LiteralParser:
    def __init__(self, A: BoundQuiverAlgebra, text: str):
        self.A = A
        self.s = text
        self.i = 0

    def error(self, msg: str):
        raise ParseError(f"module literal, column {self.i + 1}: {msg}", 1, self.s[self.i : self.i + 8] or None)

    def ws(self):
        while self.i < len(self.s) and self.s[self.i].isspace():
            self.i += 1

    def peek(self, tok: str) -> bool:
        self.ws()
        return self.s.startswith(tok, self.i)

    def eat(self, tok: str):
        if not self.peek(tok):
            self.error(f"expected {tok!r}")
        self.i += len(tok)

    def parse(self) -> list[Representation]:
        out = self.expr()
        self.ws()
        if self.i != len(self.s):
            self.error(f"unexpected {self.s[self.i]!r}")
        return out

    def expr(self, seps: str = "+") -> list[Representation]:
        out = self.term()
        while any(self.peek(c) for c in seps):
            self.i += 1
            out += self.term()
        return out

    def vertex(self) -> str:
        self.ws()
        j = self.i
        while j < len(self.s) and self.s[j] not in ")" and not self.s[j].isspace():
            j += 1
        v = self.s[self.i : j]
        if v not in self.A.quiver.vertex_index:
            self.error(f"unknown vertex {v!r}")
        self.i = j
        return v

    def term(self) -> list[Representation]:
        from .artrans import tau, tau_inv

        self.ws()
        if self.peek("{"):
            try:
                data, end = json.JSONDecoder().raw_decode(self.s, self.i)
            except json.JSONDecodeError as exc:
                self.error(f"bad JSON: {exc.msg}")
            self.i = end
            return [Representation.from_json(self.A, data)]
        for head, fn in (("tau-(", tau_inv), ("tau(", tau)):
            if self.peek(head):
                self.i += len(head)
                inner = self.expr()
                self.eat(")")
                out = []
                for X in inner:
                    Y = fn(X)
                    if not isinstance(Y, Representation):
                        raise ModuleError(f"{head[:-1]} of {X.label} is zero")
                    out.append(Y)
                return out
        if self.peek("sum("):
            self.i += 4
            inner = self.expr(seps="+,")
            self.eat(")")
            return inner
        for head, fn in (("P(", projective), ("I(", injective), ("S(", simple)):
            if self.peek(head):
                self.i += len(head)
                v = self.vertex()
                self.eat(")")
                return [fn(self.A, v)]
        self.error("expected P(a), I(a), S(a), tau(...), tau-(...), sum(...) or a JSON object")


def parse_modules(A: BoundQuiverAlgebra, text: str) -> list[Representation]:
    """The list of summands named by a module literal such as ``P(1)+tau-(S(2))``."""
    return _LiteralParser(A, text).parse()


def parse_module(A: BoundQuiverAlgebra, text: str) -> Representation:
    """The direct sum of the summands named by a module literal."""
    parts = parse_modules(A, text)
    return parts[0] if len(parts) == 1 else direct_sum(parts)[0]
