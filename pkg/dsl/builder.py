"""
Build groups from expressions.
"""

from math import factorial
from typing import Union

from constructors.families import build_base, extraspecial
from constructors.semidirect import direct_product, group_semidirect, semidirect_product
from constructors.suzuki import sz8_borel
from core.consts import Families
from core.errors import BadParams, BoundExceeded
from dsl.grammar import Atom, DirectProduct, GroupExpr, Sdp, Xsdp, parse_group_expr
from groups.finite_group import DEFAULT_BOUND, FiniteGroup

SZ8_BOREL_ORDER = 448


def _as_expr(expr: Union[GroupExpr, str]) -> GroupExpr:
    return parse_group_expr(expr) if isinstance(expr, str) else expr


def _atom_order(atom: Atom) -> int:
    family, params = atom.family, atom.params
    if family == Families.CYCLIC:
        return params[0]
    if family in (Families.ELEMENTARY_ABELIAN, Families.HOMOCYCLIC):
        return params[0] ** params[1]
    if family == Families.DIHEDRAL:
        return 2 * params[0]
    if family == Families.QUATERNION8:
        return 8
    if family == Families.EXTRASPECIAL:
        return params[0] ** 3
    if family == Families.SL23:
        return 24
    if family == Families.SZ8_BOREL:
        return SZ8_BOREL_ORDER
    if family == Families.ALT5:
        return 60
    if family == Families.SYMMETRIC:
        return factorial(params[0])
    if family == Families.ALTERNATING:
        return max(factorial(params[0]) // 2, 1)
    raise BadParams(f"unknown family: {family}", {"family": family})


def expected_order(expr: Union[GroupExpr, str]) -> int:
    """Order of the group an expression describes, without building it."""
    expr = _as_expr(expr)
    if isinstance(expr, Atom):
        return _atom_order(expr)
    if isinstance(expr, DirectProduct):
        return expected_order(expr.left) * expected_order(expr.right)
    if isinstance(expr, Sdp):
        return expr.module.order * expected_order(expr.actor)
    if isinstance(expr, Xsdp):
        return expected_order(expr.normal) * expected_order(expr.actor)
    raise BadParams("not a group expression", {"expr": repr(expr)})


def _build_atom(atom: Atom, bound: int) -> FiniteGroup:
    if atom.family == Families.EXTRASPECIAL:
        p, sign = atom.params
        return extraspecial(p, sign, bound)
    if atom.family == Families.SZ8_BOREL:
        return sz8_borel(bound)
    return build_base(atom.family, atom.params, bound)


def build(expr: Union[GroupExpr, str], bound: int = DEFAULT_BOUND) -> FiniteGroup:
    expr = _as_expr(expr)
    if expected_order(expr) > bound:
        raise BoundExceeded(bound)

    name = str(expr)
    if isinstance(expr, Atom):
        G = _build_atom(expr, bound)
    elif isinstance(expr, DirectProduct):
        G = direct_product(build(expr.left, bound), build(expr.right, bound), bound, name)
    elif isinstance(expr, Sdp):
        G = semidirect_product(expr.module, build(expr.actor, bound), expr.action, bound, name)
    else:
        G = group_semidirect(
            build(expr.normal, bound), build(expr.actor, bound), expr.images, bound, name
        )
    G.name = name
    return G
