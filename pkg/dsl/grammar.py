"""
Group expressions

    Expr   := Term ('*' Term)*
    Term   := Atom | sdp(Module, Expr, Action) | xsdp(Expr, Expr, aut(Images))
    Atom   := C(n) | EA(p,k) | Homocyclic(m,k) | D(n) | Q8 | ES(p,+|-) | SL23
            | Sz8Borel | A5 | Sym(n) | Alt(n)
    Module := 7^4 | (2x2)^4 | factors joined by '*'
    Action := maxker | mats(block;block;...), a block being one matrix per
              acting generator separated by '/'

Printing gives the canonical form: no whitespace, decimal parameters.
"""

from dataclasses import dataclass
from itertools import groupby
from typing import Tuple, Union

import lark
from lark.exceptions import UnexpectedInput, VisitError

from constructors.semidirect import ActionSpec, ExplicitMatrices, MaximalKernels, ModuleSpec
from core.consts import Families
from core.errors import BadParams, ParseError, VcsError

ATOM_SYMBOLS = {
    Families.CYCLIC: "C",
    Families.ELEMENTARY_ABELIAN: "EA",
    Families.HOMOCYCLIC: "Homocyclic",
    Families.DIHEDRAL: "D",
    Families.QUATERNION8: "Q8",
    Families.EXTRASPECIAL: "ES",
    Families.SL23: "SL23",
    Families.SZ8_BOREL: "Sz8Borel",
    Families.ALT5: "A5",
    Families.SYMMETRIC: "Sym",
    Families.ALTERNATING: "Alt",
}


@dataclass(frozen=True)
class GroupExpr:
    """Base class for group expressions."""


@dataclass(frozen=True)
class Atom(GroupExpr):
    family: str
    params: Tuple[Union[int, str], ...] = ()

    def __str__(self) -> str:
        symbol = ATOM_SYMBOLS[self.family]
        if not self.params:
            return symbol
        return f"{symbol}({','.join(str(p) for p in self.params)})"


@dataclass(frozen=True)
class DirectProduct(GroupExpr):
    """left * right; chains are nested to the left."""

    left: GroupExpr
    right: GroupExpr

    def __str__(self) -> str:
        return f"{self.left}*{self.right}"


@dataclass(frozen=True)
class Sdp(GroupExpr):
    module: ModuleSpec
    actor: GroupExpr
    action: ActionSpec

    def __str__(self) -> str:
        return f"sdp({format_module(self.module)},{self.actor},{format_action(self.action)})"


@dataclass(frozen=True)
class Xsdp(GroupExpr):
    """normal x| actor; images[j][i] is the index of the image of normal's generator i under actor's generator j."""

    normal: GroupExpr
    actor: GroupExpr
    images: Tuple[Tuple[int, ...], ...]

    def __str__(self) -> str:
        images = "/".join(",".join(str(i) for i in row) for row in self.images)
        return f"xsdp({self.normal},{self.actor},aut({images}))"


def format_module(module: ModuleSpec) -> str:
    parts = []
    for (m, r), run in groupby(module.factors):
        count = len(list(run))
        base = str(m) if r == 1 else "(" + "x".join([str(m)] * r) + ")"
        parts.append(f"{base}^{count}")
    return "*".join(parts)


def _format_matrix(matrix) -> str:
    return "[" + ",".join("[" + ",".join(str(a) for a in row) + "]" for row in matrix) + "]"


def format_action(action: ActionSpec) -> str:
    if isinstance(action, MaximalKernels):
        return "maxker"
    blocks = ";".join("/".join(_format_matrix(m) for m in block) for block in action.blocks)
    return f"mats({blocks})"


GRAMMAR = r"""
    ?start: expr

    ?expr: term
         | expr "*" term                              -> product

    ?term: atom
         | "sdp" "(" module "," expr "," action ")"     -> sdp
         | "xsdp" "(" expr "," expr "," "aut" "(" images ")" ")" -> xsdp

    atom: "C" "(" INT ")"                     -> cyclic
        | "EA" "(" INT "," INT ")"            -> elementary_abelian
        | "Homocyclic" "(" INT "," INT ")"    -> homocyclic
        | "D" "(" INT ")"                     -> dihedral
        | "Q8"                                -> quaternion8
        | "ES" "(" INT "," SIGN ")"           -> extraspecial
        | "SL23"                              -> sl23
        | "Sz8Borel"                          -> sz8_borel
        | "A5"                                -> alt5
        | "Sym" "(" INT ")"                   -> symmetric
        | "Alt" "(" INT ")"                   -> alternating

    module: mfactor ("*" mfactor)*
    mfactor: INT "^" INT                      -> cyclic_power
           | "(" INT ("x" INT)+ ")" "^" INT   -> block_power

    action: "maxker"                          -> maxker
          | "mats" "(" block (";" block)* ")" -> mats
    block: matrix ("/" matrix)*
    matrix: "[" row ("," row)* "]"
    row: "[" SIGNED_INT ("," SIGNED_INT)* "]"

    images: index_list ("/" index_list)*
    index_list: INT ("," INT)*

    SIGN: "+" | "-"

    %import common.INT
    %import common.SIGNED_INT
    %import common.WS
    %ignore WS
"""

_parser = lark.Lark(GRAMMAR, start="start", parser="lalr")


def _ints(items) -> Tuple[int, ...]:
    return tuple(int(t) for t in items)


class GroupExprTransformer(lark.Transformer):
    def cyclic(self, items):
        return Atom(Families.CYCLIC, _ints(items))

    def elementary_abelian(self, items):
        return Atom(Families.ELEMENTARY_ABELIAN, _ints(items))

    def homocyclic(self, items):
        return Atom(Families.HOMOCYCLIC, _ints(items))

    def dihedral(self, items):
        return Atom(Families.DIHEDRAL, _ints(items))

    def quaternion8(self, items):
        return Atom(Families.QUATERNION8)

    def extraspecial(self, items):
        return Atom(Families.EXTRASPECIAL, (int(items[0]), str(items[1])))

    def sl23(self, items):
        return Atom(Families.SL23)

    def sz8_borel(self, items):
        return Atom(Families.SZ8_BOREL)

    def alt5(self, items):
        return Atom(Families.ALT5)

    def symmetric(self, items):
        return Atom(Families.SYMMETRIC, _ints(items))

    def alternating(self, items):
        return Atom(Families.ALTERNATING, _ints(items))

    def product(self, items):
        return DirectProduct(items[0], items[1])

    def sdp(self, items):
        module, actor, action = items
        return Sdp(module, actor, action)

    def xsdp(self, items):
        normal, actor, images = items
        return Xsdp(normal, actor, images)

    def module(self, items):
        return ModuleSpec(tuple(f for factors in items for f in factors))

    def cyclic_power(self, items):
        m, count = _ints(items)
        return [(m, 1)] * count

    def block_power(self, items):
        *moduli, count = _ints(items)
        if len(set(moduli)) != 1:
            raise BadParams("a module block needs a single modulus", {"moduli": list(moduli)})
        return [(moduli[0], len(moduli))] * count

    def maxker(self, items):
        return MaximalKernels()

    def mats(self, items):
        return ExplicitMatrices(tuple(items))

    def block(self, items):
        return tuple(items)

    def matrix(self, items):
        return tuple(items)

    def row(self, items):
        return _ints(items)

    def images(self, items):
        return tuple(items)

    def index_list(self, items):
        return _ints(items)


_transformer = GroupExprTransformer()


def parse_group_expr(text: str) -> GroupExpr:
    try:
        tree = _parser.parse(text)
    except UnexpectedInput as e:
        expected = getattr(e, "expected", None) or getattr(e, "allowed", None) or ()
        raise ParseError(getattr(e, "line", -1), getattr(e, "column", -1), expected) from e
    try:
        return _transformer.transform(tree)
    except VisitError as e:
        if isinstance(e.orig_exc, VcsError):
            raise e.orig_exc from e
        raise
