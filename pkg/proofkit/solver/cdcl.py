"""
Conflict-driven clause learning SAT solver.

Two watched literals, first-UIP learning, activity-based branching with a
lazy heap, phase saving, Luby restarts and periodic removal of inactive
learned clauses. Deterministic for a fixed seed.
"""

import heapq
import random
import time
from typing import Iterable, List, Optional

from proofkit.utils.exceptions import MalformedInstanceError


RESTART_BASE = 100
VAR_DECAY = 0.95
CLAUSE_DECAY = 0.999
RESCALE_LIMIT = 1e100
CLOCK_INTERVAL = 256


class _Clause:
    __slots__ = ("lits", "learnt", "activity", "deleted")

    def __init__(self, lits: List[int], learnt: bool = False):
        self.lits = lits
        self.learnt = learnt
        self.activity = 0.0
        self.deleted = False


def luby(i: int) -> int:
    """The i-th element (1-based) of the Luby sequence 1 1 2 1 1 2 4 ..."""
    k = 1
    while (1 << k) - 1 < i:
        k += 1
    while True:
        if i == (1 << k) - 1:
            return 1 << (k - 1)
        i -= (1 << (k - 1)) - 1
        k = 1
        while (1 << k) - 1 < i:
            k += 1


class CDCLSolver:
    """
    Incremental CDCL solver over DIMACS-style integer literals.

    Clauses may be added between `solve` calls; learned clauses are kept.
    """

    def __init__(self, num_vars: int, clauses: Iterable[Iterable[int]] = (), seed: int = 0):
        self.num_vars = num_vars
        n = num_vars + 1
        self.assigns: List[int] = [0] * n
        self.level: List[int] = [0] * n
        self.reason: List[Optional[_Clause]] = [None] * n
        self.phase: List[int] = [-1] * n
        self.activity: List[float] = [0.0] * n
        self.watches: List[List[_Clause]] = [[] for _ in range(2 * n)]
        self.trail: List[int] = []
        self.trail_lim: List[int] = []
        self.qhead = 0
        self.learnts: List[_Clause] = []
        self.num_original = 0
        self.var_inc = 1.0
        self.clause_inc = 1.0
        self.unsat = False
        self.conflicts = 0
        self.decisions = 0
        self.propagations = 0
        self._model: List[int] = []

        rng = random.Random(seed)
        for v in range(1, n):
            self.activity[v] = rng.random() * 1e-5
        self._heap = [(-self.activity[v], v) for v in range(1, n)]
        heapq.heapify(self._heap)

        for clause in clauses:
            self.add_clause(clause)

    # Literal helpers

    @staticmethod
    def _index(lit: int) -> int:
        return 2 * lit if lit > 0 else -2 * lit + 1

    def _value(self, lit: int) -> int:
        value = self.assigns[abs(lit)]
        return value if lit > 0 else -value

    def _decision_level(self) -> int:
        return len(self.trail_lim)

    def _enqueue(self, lit: int, reason: Optional[_Clause]) -> None:
        v = abs(lit)
        self.assigns[v] = 1 if lit > 0 else -1
        self.level[v] = self._decision_level()
        self.reason[v] = reason
        self.trail.append(lit)

    def _attach(self, clause: _Clause) -> None:
        self.watches[self._index(clause.lits[0])].append(clause)
        self.watches[self._index(clause.lits[1])].append(clause)

    # Clause database

    def add_clause(self, clause: Iterable[int]) -> None:
        """
        Add a clause at decision level 0.

        Raises:
            MalformedInstanceError: If a literal is 0 or names an undeclared variable
        """
        if self.unsat:
            return
        self._backtrack(0)
        lits: List[int] = []
        for lit in clause:
            if lit == 0 or abs(lit) > self.num_vars:
                raise MalformedInstanceError(f"literal {lit} outside 1..{self.num_vars}")
            if -lit in lits:
                return
            if lit not in lits:
                lits.append(lit)
        kept = []
        for lit in lits:
            value = self._value(lit)
            if value > 0:
                return
            if value == 0:
                kept.append(lit)
        if not kept:
            self.unsat = True
            return
        if len(kept) == 1:
            self._enqueue(kept[0], None)
            if self._propagate() is not None:
                self.unsat = True
            return
        self.num_original += 1
        self._attach(_Clause(kept))

    def _reduce_learnts(self) -> None:
        locked = {id(self.reason[abs(lit)]) for lit in self.trail if self.reason[abs(lit)] is not None}
        self.learnts.sort(key=lambda c: c.activity)
        half = len(self.learnts) // 2
        kept = []
        for i, clause in enumerate(self.learnts):
            if i < half and len(clause.lits) > 2 and id(clause) not in locked:
                clause.deleted = True
            else:
                kept.append(clause)
        self.learnts = kept

    # Search

    def _propagate(self) -> Optional[_Clause]:
        while self.qhead < len(self.trail):
            p = self.trail[self.qhead]
            self.qhead += 1
            self.propagations += 1
            false_lit = -p
            watchers = self.watches[self._index(false_lit)]
            kept: List[_Clause] = []
            conflict = None
            i = 0
            while i < len(watchers):
                clause = watchers[i]
                i += 1
                if clause.deleted:
                    continue
                lits = clause.lits
                if lits[0] == false_lit:
                    lits[0], lits[1] = lits[1], lits[0]
                first = lits[0]
                if self._value(first) > 0:
                    kept.append(clause)
                    continue
                moved = False
                for k in range(2, len(lits)):
                    if self._value(lits[k]) >= 0:
                        lits[1], lits[k] = lits[k], lits[1]
                        self.watches[self._index(lits[1])].append(clause)
                        moved = True
                        break
                if moved:
                    continue
                kept.append(clause)
                if self._value(first) < 0:
                    conflict = clause
                    kept.extend(watchers[i:])
                    break
                self._enqueue(first, clause)
            self.watches[self._index(false_lit)] = kept
            if conflict is not None:
                self.qhead = len(self.trail)
                return conflict
        return None

    def _bump_var(self, v: int) -> None:
        self.activity[v] += self.var_inc
        if self.activity[v] > RESCALE_LIMIT:
            for u in range(1, self.num_vars + 1):
                self.activity[u] *= 1e-100
            self.var_inc *= 1e-100
            self._heap = [(-self.activity[u], u) for u in range(1, self.num_vars + 1) if self.assigns[u] == 0]
            heapq.heapify(self._heap)
            return
        if self.assigns[v] == 0:
            heapq.heappush(self._heap, (-self.activity[v], v))

    def _bump_clause(self, clause: _Clause) -> None:
        clause.activity += self.clause_inc
        if clause.activity > RESCALE_LIMIT:
            for c in self.learnts:
                c.activity *= 1e-100
            self.clause_inc *= 1e-100

    def _analyze(self, conflict: _Clause):
        seen = set()
        learnt: List[int] = [0]
        counter = 0
        p = 0
        index = len(self.trail) - 1
        clause: Optional[_Clause] = conflict
        current = self._decision_level()
        while True:
            if clause.learnt:
                self._bump_clause(clause)
            for q in clause.lits:
                if q == p:
                    continue
                v = abs(q)
                if v in seen or self.level[v] == 0:
                    continue
                seen.add(v)
                self._bump_var(v)
                if self.level[v] == current:
                    counter += 1
                else:
                    learnt.append(q)
            while abs(self.trail[index]) not in seen:
                index -= 1
            p = self.trail[index]
            index -= 1
            clause = self.reason[abs(p)]
            seen.discard(abs(p))
            counter -= 1
            if counter == 0:
                break
        learnt[0] = -p

        back_level = 0
        if len(learnt) > 1:
            best = 1
            for k in range(2, len(learnt)):
                if self.level[abs(learnt[k])] > self.level[abs(learnt[best])]:
                    best = k
            learnt[1], learnt[best] = learnt[best], learnt[1]
            back_level = self.level[abs(learnt[1])]
        return learnt, back_level

    def _backtrack(self, level: int) -> None:
        if self._decision_level() <= level:
            return
        start = self.trail_lim[level]
        for lit in self.trail[start:]:
            v = abs(lit)
            self.phase[v] = 1 if lit > 0 else -1
            self.assigns[v] = 0
            self.reason[v] = None
            heapq.heappush(self._heap, (-self.activity[v], v))
        del self.trail[start:]
        del self.trail_lim[level:]
        self.qhead = len(self.trail)

    def _pick_branch(self) -> int:
        while self._heap:
            _, v = heapq.heappop(self._heap)
            if self.assigns[v] == 0:
                return v
        return 0

    def solve(self, budget: Optional[float] = None) -> Optional[bool]:
        """
        Search for a model.

        Args:
            budget: Wall-clock seconds; None for no limit

        Returns:
            True (satisfiable), False (unsatisfiable) or None (budget exhausted)
        """
        deadline = None if budget is None else time.monotonic() + budget
        if self.unsat:
            return False
        self._backtrack(0)
        if self._propagate() is not None:
            self.unsat = True
            return False

        max_learnts = max(1000, self.num_original // 3)
        restart = 1
        restart_limit = RESTART_BASE * luby(restart)
        since_restart = 0
        ticks = 0

        while True:
            ticks += 1
            if deadline is not None and ticks % CLOCK_INTERVAL == 0 and time.monotonic() > deadline:
                self._backtrack(0)
                return None
            conflict = self._propagate()
            if conflict is not None:
                self.conflicts += 1
                since_restart += 1
                if self._decision_level() == 0:
                    self.unsat = True
                    return False
                learnt, back_level = self._analyze(conflict)
                self._backtrack(back_level)
                if len(learnt) == 1:
                    self._enqueue(learnt[0], None)
                else:
                    clause = _Clause(learnt, learnt=True)
                    self._attach(clause)
                    self.learnts.append(clause)
                    self._bump_clause(clause)
                    self._enqueue(learnt[0], clause)
                self.var_inc /= VAR_DECAY
                self.clause_inc /= CLAUSE_DECAY
                continue

            if since_restart >= restart_limit:
                self._backtrack(0)
                restart += 1
                restart_limit = RESTART_BASE * luby(restart)
                since_restart = 0
                continue
            if len(self.learnts) > max_learnts:
                self._reduce_learnts()
                max_learnts = int(max_learnts * 1.1)

            v = self._pick_branch()
            if v == 0:
                self._model = [u if self.assigns[u] > 0 else -u for u in range(1, self.num_vars + 1)]
                return True
            self.decisions += 1
            self.trail_lim.append(len(self.trail))
            self._enqueue(v * self.phase[v], None)

    def model(self) -> List[int]:
        """Signed literals of the last model found."""
        return list(self._model)
