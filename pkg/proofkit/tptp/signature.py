"""Predicate signature with stable numeric codes."""

from typing import Dict, Iterator, List, Optional, Tuple

from proofkit.utils.exceptions import SignatureError


TOP = "$true"
BOTTOM = "$false"
NEQ = "neq"
EQ = "eq"

RESERVED: Tuple[Tuple[str, int], ...] = ((TOP, 0), (BOTTOM, 0), (NEQ, 2))


class Signature:
    """
    Ordered list of predicate symbols with their arities.

    The position of a predicate in the list is its code in the constraint
    encoding, so insertion order must be deterministic. ⊤, ⊥ and `neq`
    are always present as the first three entries.
    """

    def __init__(self) -> None:
        self._order: List[str] = []
        self._arity: Dict[str, int] = {}
        self._bar: Dict[str, str] = {}
        self._positive: Dict[str, str] = {}
        for name, arity in RESERVED:
            self._append(name, arity)

    def _append(self, name: str, arity: int) -> None:
        self._order.append(name)
        self._arity[name] = arity

    def register(self, name: str, arity: int, line: Optional[int] = None) -> None:
        """
        Record a predicate occurrence.

        Args:
            name: Predicate symbol
            arity: Number of arguments at this occurrence
            line: Source line for error messages

        Raises:
            SignatureError: If the predicate was seen before with another arity
        """
        known = self._arity.get(name)
        if known is None:
            self._append(name, arity)
            return
        if known != arity:
            where = f" (line {line})" if line is not None else ""
            raise SignatureError(
                f"predicate {name} used with arity {arity}{where}, previously {known}"
            )

    def bar(self, name: str) -> Tuple[str, bool]:
        """
        Return the predicate standing for the negation of `name`.

        Bars are named `n<name>` with a fallback when that name is already
        taken. `eq` and `neq` get bars like any other predicate, so `neq` is
        never linked to `eq`.

        Returns:
            Tuple of (bar predicate name, whether it was created by this call)
        """
        if name in self._bar:
            return self._bar[name], False
        if name in self._positive:
            return self._positive[name], False
        if name not in self._arity:
            raise SignatureError(f"unknown predicate {name}")
        if name in (TOP, BOTTOM):
            raise SignatureError("truth constants have no bar predicate")

        bar_name = self._fresh_bar_name(name)
        self._append(bar_name, self._arity[name])
        self._bar[name] = bar_name
        self._positive[bar_name] = name
        return bar_name, True

    def _fresh_bar_name(self, name: str) -> str:
        candidates = [f"n{name}", f"not_{name}"]
        candidates.extend(f"not_{name}_{k}" for k in range(2, 100))
        for candidate in candidates:
            if candidate not in self._arity:
                return candidate
        raise SignatureError(f"cannot name a bar predicate for {name}")

    def is_bar(self, name: str) -> bool:
        return name in self._positive

    def positive_of(self, bar_name: str) -> Optional[str]:
        """Predicate negated by `bar_name`, or None if it is not a bar."""
        return self._positive.get(bar_name)

    def bars(self) -> Dict[str, str]:
        """Mapping positive predicate -> bar predicate."""
        return dict(self._bar)

    def arity(self, name: str) -> int:
        try:
            return self._arity[name]
        except KeyError:
            raise SignatureError(f"unknown predicate {name}") from None

    def code(self, name: str) -> int:
        try:
            return self._order.index(name)
        except ValueError:
            raise SignatureError(f"unknown predicate {name}") from None

    def name_of(self, code: int) -> str:
        return self._order[code]

    def copy(self) -> "Signature":
        clone = Signature.__new__(Signature)
        clone._order = list(self._order)
        clone._arity = dict(self._arity)
        clone._bar = dict(self._bar)
        clone._positive = dict(self._positive)
        return clone

    @property
    def predicates(self) -> List[Tuple[str, int]]:
        return [(name, self._arity[name]) for name in self._order]

    @property
    def max_arity(self) -> int:
        return max(self._arity.values(), default=0)

    def __contains__(self, name: object) -> bool:
        return name in self._arity

    def __iter__(self) -> Iterator[str]:
        return iter(self._order)

    def __len__(self) -> int:
        return len(self._order)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Signature):
            return NotImplemented
        return self.predicates == other.predicates and self._bar == other._bar

    def __repr__(self) -> str:
        inner = ", ".join(f"{name}/{arity}" for name, arity in self.predicates)
        return f"Signature({inner})"
