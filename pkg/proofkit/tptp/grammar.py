"""Lark grammar for the fof subset and the tree transformer."""

from functools import lru_cache

from lark import Lark, Transformer, v_args

from proofkit.utils.exceptions import SignatureError

from .ast import (
    FAnd,
    FAtom,
    FConst,
    FFalse,
    FIff,
    FImplies,
    FNot,
    FNumber,
    FOr,
    FQuant,
    FTrue,
    FVar,
    FWild,
)


FOF_GRAMMAR = r"""
start: statement*

statement: "fof" "(" name "," LOWER_WORD "," item ("," item)* ")" "."

?item: formula
     | INT -> number_item

name: LOWER_WORD | UPPER_WORD | INT

?formula: impl_formula
        | impl_formula "<=>" impl_formula -> iff

?impl_formula: or_formula
             | or_formula "=>" impl_formula -> implies
             | or_formula "<=" or_formula -> rimplies

?or_formula: and_formula
           | and_formula ("|" and_formula)+ -> disjunction

?and_formula: unary
            | unary ("&" unary)+ -> conjunction

?unary: "~" unary -> negation
      | QUANTIFIER "[" UPPER_WORD ("," UPPER_WORD)* "]" ":" unary -> quantified
      | "(" formula ")"
      | atomic

?atomic: pred_name -> atom
       | pred_name "(" term ("," term)* ")" -> atom
       | simple_term "=" simple_term -> equality
       | simple_term "!=" simple_term -> disequality
       | "$true" -> true
       | "$false" -> false

pred_name: LOWER_WORD | WILD

?term: simple_term
     | LOWER_WORD "(" term ("," term)* ")" -> function_term

?simple_term: UPPER_WORD -> var
            | LOWER_WORD -> const
            | WILD -> wild
            | INT -> number

QUANTIFIER: "!" | "?"
UPPER_WORD: /[A-Z][A-Za-z0-9_]*/
LOWER_WORD: /[a-z][A-Za-z0-9_]*/
WILD: "_"
INT: /[0-9]+/

COMMENT: /%[^\n]*/
BLOCK_COMMENT: /\/\*(.|\n)*?\*\//

%import common.WS
%ignore WS
%ignore COMMENT
%ignore BLOCK_COMMENT
"""


class RawStatement:
    """One `fof(...)` clause before role interpretation."""

    __slots__ = ("name", "role", "items", "line")

    def __init__(self, name: str, role: str, items: list, line: int):
        self.name = name
        self.role = role
        self.items = items
        self.line = line


@v_args(inline=True)
class FofTransformer(Transformer):
    """Turn lark parse trees into `proofkit.tptp.ast` nodes."""

    def start(self, *statements):
        return list(statements)

    @v_args(meta=True)
    def statement(self, meta, children):
        name, role, *items = children
        return RawStatement(name, str(role), items, meta.line)

    def name(self, token):
        return str(token)

    def number_item(self, token):
        return FNumber(int(token))

    def iff(self, left, right):
        return FIff(left, right)

    def implies(self, left, right):
        return FImplies(left, right)

    def rimplies(self, left, right):
        return FImplies(right, left)

    def disjunction(self, *items):
        return FOr(tuple(items))

    def conjunction(self, *items):
        return FAnd(tuple(items))

    def negation(self, body):
        return FNot(body)

    def quantified(self, quantifier, *rest):
        *variables, body = rest
        return FQuant(str(quantifier), tuple(str(v) for v in variables), body)

    def atom(self, predicate, *args):
        return FAtom(predicate, tuple(args))

    def equality(self, left, right):
        return FAtom("eq", (left, right))

    def disequality(self, left, right):
        return FAtom("neq", (left, right))

    def true(self):
        return FTrue()

    def false(self):
        return FFalse()

    def pred_name(self, token):
        return None if token.type == "WILD" else str(token)

    def function_term(self, symbol, *args):
        raise SignatureError(
            f"line {symbol.line}: function symbol {symbol}/{len(args)} is not allowed"
        )

    def var(self, token):
        return FVar(str(token))

    def const(self, token):
        return FConst(str(token))

    def wild(self, _token):
        return FWild()

    def number(self, token):
        return FNumber(int(token))


@lru_cache(maxsize=1)
def get_parser() -> Lark:
    """Build (once) the LALR parser for the fof subset."""
    return Lark(
        FOF_GRAMMAR,
        parser="lalr",
        propagate_positions=True,
        maybe_placeholders=False,
    )
