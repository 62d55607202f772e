"""Raw first-order formula trees produced by the fof parser."""

from dataclasses import dataclass
from typing import Iterator, Optional, Tuple, Union


@dataclass(frozen=True)
class FVar:
    """Variable occurrence (upper-case identifier)."""

    name: str


@dataclass(frozen=True)
class FConst:
    """Constant occurrence (lower-case identifier)."""

    name: str


@dataclass(frozen=True)
class FWild:
    """The `_` wildcard, allowed in goals and hints."""


@dataclass(frozen=True)
class FNumber:
    """Integer argument, only meaningful inside hints."""

    value: int


FTerm = Union[FVar, FConst, FWild, FNumber]


@dataclass(frozen=True)
class FAtom:
    """Atomic formula. `predicate` is None for a wildcard predicate."""

    predicate: Optional[str]
    args: Tuple[FTerm, ...] = ()

    @property
    def arity(self) -> int:
        return len(self.args)


@dataclass(frozen=True)
class FTrue:
    pass


@dataclass(frozen=True)
class FFalse:
    pass


@dataclass(frozen=True)
class FNot:
    body: "Formula"


@dataclass(frozen=True)
class FAnd:
    items: Tuple["Formula", ...]


@dataclass(frozen=True)
class FOr:
    items: Tuple["Formula", ...]


@dataclass(frozen=True)
class FImplies:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class FIff:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class FQuant:
    """Quantified formula; `kind` is `!` (forall) or `?` (exists)."""

    kind: str
    variables: Tuple[str, ...]
    body: "Formula"


Formula = Union[FAtom, FTrue, FFalse, FNot, FAnd, FOr, FImplies, FIff, FQuant]


def iter_atoms(formula: Formula) -> Iterator[FAtom]:
    """Yield every atom of a formula in left-to-right order."""
    if isinstance(formula, FAtom):
        yield formula
    elif isinstance(formula, FNot):
        yield from iter_atoms(formula.body)
    elif isinstance(formula, (FAnd, FOr)):
        for item in formula.items:
            yield from iter_atoms(item)
    elif isinstance(formula, (FImplies, FIff)):
        yield from iter_atoms(formula.left)
        yield from iter_atoms(formula.right)
    elif isinstance(formula, FQuant):
        yield from iter_atoms(formula.body)


def free_variables(formula: Formula) -> Tuple[str, ...]:
    """Free variable names in order of first occurrence."""
    seen: list = []

    def walk(node: Formula, bound: frozenset) -> None:
        if isinstance(node, FAtom):
            for arg in node.args:
                if isinstance(arg, FVar) and arg.name not in bound and arg.name not in seen:
                    seen.append(arg.name)
        elif isinstance(node, FNot):
            walk(node.body, bound)
        elif isinstance(node, (FAnd, FOr)):
            for item in node.items:
                walk(item, bound)
        elif isinstance(node, (FImplies, FIff)):
            walk(node.left, bound)
            walk(node.right, bound)
        elif isinstance(node, FQuant):
            walk(node.body, bound | frozenset(node.variables))

    walk(formula, frozenset())
    return tuple(seen)
