"""
Backtracking search for a finite algebra that satisfies a list of equations
and refutes a goal equation.

The unknowns are the cells of the operation tables: one per constant, ``n``
for negation and ``n * n`` each for conjunction and disjunction. Cells are
tried in a fixed order, constants first and then shell by shell: shell ``k``
holds every cell whose largest argument is ``k``. Each ground instance of an
axiom is watched on the first unassigned cell its evaluation meets. When
that cell is assigned the instance is evaluated again: it is then satisfied,
violated (backtrack), forced (one side known, the other blocked only at its
own top cell, which receives the known value) or watched on its next cell.
Every change is recorded on a trail and undone in reverse order.

Until the goal is refuted the next cell is the first one blocking an undecided
ground instance of the goal, and a branch ends as soon as every instance is
decided with equal sides. Once some instance differs the remaining cells are
filled in the fixed order above.

With symmetry breaking a free choice ranges over the elements mentioned so
far plus one fresh element, the least number heuristic.
"""
import logging
import time
from collections import deque
from itertools import product

from ..sclogic_error import AxiomSetError, SearchExhausted
from ..terms import Atom, Const, Neg, ScAnd, Var, is_conditional, iter_nodes, variables
from ..translate import cond_to_seq, desugar_full
from .algebra import CounterExample, FiniteAlgebra
from .config import SearchConfig

logger = logging.getLogger(__name__)

VAR, CONST, NEG, AND, OR = range(5)
ASSIGNED, RELEASED, WATCHED = range(3)
SAT, CONFLICT, FORCE, WAIT = range(4)
GOAL_REFUTED, GOAL_HOLDS = -1, -2


class _Exhausted(Exception):
    pass


def prepare(e):
    """The sides of ``e`` in the signature the finder searches: sequential,
    without full connectives and without atoms."""
    lhs, rhs = e.lhs, e.rhs
    if is_conditional(lhs) or is_conditional(rhs):
        lhs, rhs = cond_to_seq(lhs), cond_to_seq(rhs)
    lhs, rhs = desugar_full(lhs), desugar_full(rhs)
    for side in (lhs, rhs):
        if any(isinstance(node, Atom) for node in iter_nodes(side)):
            raise AxiomSetError('Equation "%s" mentions atoms, model search needs variables only' % e.name)
    return lhs, rhs


def constants_of(sides):
    found = {node.value for side in sides for node in iter_nodes(side) if isinstance(node, Const)}
    return tuple(c for c in "TFU" if c in found)


def _compile(t, var_index, const_cell):
    if isinstance(t, Var):
        return (VAR, var_index[t.name])
    if isinstance(t, Const):
        return (CONST, const_cell[t.value])
    if isinstance(t, Neg):
        return (NEG, _compile(t.arg, var_index, const_cell))
    kind = AND if isinstance(t, ScAnd) else OR
    return (kind, _compile(t.left, var_index, const_cell), _compile(t.right, var_index, const_cell))


def _compile_equation(lhs, rhs, const_cell):
    names = tuple(dict.fromkeys(v.name for v in variables(lhs) + variables(rhs)))
    index = {name: i for i, name in enumerate(names)}
    return _compile(lhs, index, const_cell), _compile(rhs, index, const_cell), names


class _Search(object):
    def __init__(self, size, axioms, goal, consts, cfg, deadline_at):
        n = self.n = size
        self.consts = consts
        self.budget = cfg.budget
        self.symmetry = cfg.symmetry_breaking
        self.deadline_at = deadline_at

        nc = len(consts)
        const_cell = {c: i for i, c in enumerate(consts)}
        self.neg_base = nc
        self.and_base = nc + n
        self.or_base = nc + n + n * n
        pairs = [(i, j) for i in range(n) for j in range(n)]
        self.args = [()] * nc + [(i,) for i in range(n)] + pairs + pairs

        self.order = list(range(nc))
        for k in range(n):
            self.order.append(self.neg_base + k)
            for base in (self.and_base, self.or_base):
                self.order.extend(base + i * n + j for i, j in pairs if max(i, j) == k)

        self.axioms = [_compile_equation(lhs, rhs, const_cell) for lhs, rhs in axioms]
        self.goal = _compile_equation(goal[0], goal[1], const_cell)

        self.val = [-1] * len(self.args)
        self.watch = [[] for _ in self.args]
        self.trail = []
        self.queue = deque()
        self.steps = 0

    def _eval(self, node, env):
        """``(element, False)`` or, when blocked, ``(-1 - cell, top)`` for the
        first unassigned cell met; ``top`` says it is the cell of ``node`` itself."""
        kind = node[0]
        if kind == VAR:
            return env[node[1]], False
        if kind == CONST:
            cell = node[1]
        elif kind == NEG:
            a = self._eval(node[1], env)[0]
            if a < 0:
                return a, False
            cell = self.neg_base + a
        else:
            a = self._eval(node[1], env)[0]
            if a < 0:
                return a, False
            b = self._eval(node[2], env)[0]
            if b < 0:
                return b, False
            cell = (self.and_base if kind == AND else self.or_base) + a * self.n + b
        v = self.val[cell]
        if v >= 0:
            return v, False
        return -1 - cell, True

    def _check(self, inst):
        lhs, rhs, _ = self.axioms[inst[0]]
        env = inst[1]
        left, left_top = self._eval(lhs, env)
        right, right_top = self._eval(rhs, env)
        if left >= 0 and right >= 0:
            return (SAT, None, None) if left == right else (CONFLICT, None, None)
        if left >= 0 and right_top:
            return FORCE, -1 - right, left
        if right >= 0 and left_top:
            return FORCE, -1 - left, right
        return WAIT, -1 - (left if left < 0 else right), None

    def _settle(self, inst):
        status, cell, value = self._check(inst)
        if status == CONFLICT:
            return False
        if status == FORCE:
            self._assign(cell, value)
        elif status == WAIT:
            self.watch[cell].append(inst)
            self.trail.append((WATCHED, cell))
        return True

    def _assign(self, cell, value):
        self.steps += 1
        if self.steps > self.budget:
            raise _Exhausted("budget of %d assignments used up" % self.budget)
        if self.steps & 1023 == 0 and time.monotonic() > self.deadline_at:
            raise _Exhausted("deadline passed")
        self.val[cell] = value
        self.trail.append((ASSIGNED, cell))
        self.queue.append(cell)

    def _propagate(self):
        queue = self.queue
        while queue:
            cell = queue.popleft()
            pending = self.watch[cell]
            if not pending:
                continue
            self.watch[cell] = []
            self.trail.append((RELEASED, cell, pending))
            for inst in pending:
                if not self._settle(inst):
                    queue.clear()
                    return False
        return True

    def _undo(self, mark):
        trail = self.trail
        while len(trail) > mark:
            entry = trail.pop()
            if entry[0] == ASSIGNED:
                self.val[entry[1]] = -1
            elif entry[0] == RELEASED:
                self.watch[entry[1]] = entry[2]
            else:
                self.watch[entry[1]].pop()

    def _mentioned(self, cell):
        top = max(self.args[cell], default=-1)
        for c, v in enumerate(self.val):
            if v >= 0:
                top = max(top, v, *self.args[c])
        return top

    def _algebra(self):
        n, val = self.n, self.val
        neg = tuple(val[self.neg_base:self.neg_base + n])
        and_ = tuple(tuple(val[self.and_base + i * n:self.and_base + (i + 1) * n]) for i in range(n))
        or_ = tuple(tuple(val[self.or_base + i * n:self.or_base + (i + 1) * n]) for i in range(n))
        consts = {c: val[i] for i, c in enumerate(self.consts)}
        return FiniteAlgebra(n, neg, and_, or_, consts)

    def _refute(self):
        lhs, rhs, names = self.goal
        for env in product(range(self.n), repeat=len(names)):
            if self._eval(lhs, env)[0] != self._eval(rhs, env)[0]:
                return self._algebra(), dict(zip(names, env))
        return None

    def _goal_status(self):
        """GOAL_REFUTED, GOAL_HOLDS, or the first cell blocking an undecided goal instance."""
        lhs, rhs, names = self.goal
        blocked = GOAL_HOLDS
        for env in product(range(self.n), repeat=len(names)):
            left = self._eval(lhs, env)[0]
            right = self._eval(rhs, env)[0]
            if left >= 0 and right >= 0:
                if left != right:
                    return GOAL_REFUTED
            elif blocked == GOAL_HOLDS:
                blocked = -1 - (left if left < 0 else right)
        return blocked

    def _search(self, pos, refuted):
        if not refuted:
            cell = self._goal_status()
            if cell == GOAL_HOLDS:
                return None
            refuted = cell == GOAL_REFUTED
        if refuted:
            order, val = self.order, self.val
            while pos < len(order) and val[order[pos]] >= 0:
                pos += 1
            if pos == len(order):
                return self._refute()
            cell = order[pos]
        top = self.n - 1
        if self.symmetry:
            top = min(top, self._mentioned(cell) + 1)
        for value in range(top + 1):
            mark = len(self.trail)
            self._assign(cell, value)
            if self._propagate():
                found = self._search(pos, refuted)
                if found is not None:
                    return found
            self._undo(mark)
        return None

    def run(self):
        """``(algebra, witness)`` or None when no model of this size refutes the goal."""
        lhs, rhs, _ = self.goal
        if lhs == rhs:
            return None
        for i, (_, _, names) in enumerate(self.axioms):
            for env in product(range(self.n), repeat=len(names)):
                if not self._settle((i, env)):
                    return None
        if not self._propagate():
            return None
        return self._search(0, False)


def find_model(axioms, goal, cfg=None):
    """
    Search domain sizes ``1 .. cfg.max_size`` in turn for an algebra in which
    every equation of ``axioms`` holds and ``goal`` fails.

    Returns the first `CounterExample` found, so its size is the least one
    that has a counter-model, or None when no size up to the maximum has one.
    Raises `SearchExhausted` when the budget or the deadline runs out first.
    """
    cfg = cfg or SearchConfig()
    axioms = list(axioms)
    sides = [prepare(e) for e in axioms]
    goal_sides = prepare(goal)
    consts = constants_of([s for pair in sides for s in pair] + list(goal_sides))
    deadline_at = time.monotonic() + cfg.deadline
    completed = []
    for size in range(1, cfg.max_size + 1):
        search = _Search(size, sides, goal_sides, consts, cfg, deadline_at)
        logger.debug("size %d: %d cells, %d axioms, goal %s", size, len(search.order), len(axioms), goal.name)
        try:
            found = search.run()
        except _Exhausted as e:
            raise SearchExhausted(
                "No answer for %s: %s at size %d" % (goal.name, e, size), completed, size
            ) from None
        logger.debug("size %d done after %d assignments", size, search.steps)
        if found is not None:
            algebra, witness = found
            logger.info("counter-model of size %d for %s", size, goal.name)
            return CounterExample(algebra, witness, goal)
        completed.append(size)
    return None
