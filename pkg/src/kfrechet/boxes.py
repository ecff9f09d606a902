"""3-SAT to box-covering reduction workbench.

A formula is turned into a rectangle B filled with labelled unit-height
boxes such that B's bottom and left boundaries can be covered by at most
k of the boxes exactly when the formula is satisfiable. Construction at
a glance: per variable two boxes in the variable columns (one per
polarity), per literal occurrence a wide/unit box pair in the split
columns, and per occurrence one box over its clause column. Every unit
row of the left boundary ends up with exactly two boxes of opposite
labels, and k is half the box count, so a covering selection must pick
exactly one box per row; that choice is the variable assignment.

Literals are signed integers: +v / -v for variable v in 1..n.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .config import resolve_tol
from .curves import Interval, interval_union_covers


class FormulaError(ValueError):
    """Raised for malformed CNF input."""


@dataclass(frozen=True)
class CnfFormula:
    num_vars: int
    clauses: tuple

    def __post_init__(self):
        if self.num_vars < 1:
            raise FormulaError("formula needs at least one variable")
        norm = []
        for idx, clause in enumerate(self.clauses):
            lits = tuple(int(l) for l in clause)
            if not 1 <= len(lits) <= 3:
                raise FormulaError(f"clause {idx} has size {len(lits)}, expected 1..3")
            for lit in lits:
                if lit == 0 or abs(lit) > self.num_vars:
                    raise FormulaError(f"clause {idx}: literal {lit} out of range")
            norm.append(lits)
        object.__setattr__(self, "clauses", tuple(norm))

    @property
    def num_clauses(self) -> int:
        return len(self.clauses)


@dataclass(frozen=True)
class LabeledBox:
    """Axis-aligned unit-height box with bottom-left corner (x, y)."""

    x: float
    y: float
    w: float
    label: int

    def __post_init__(self):
        if self.w < 1.0:
            raise ValueError(f"box width must be >= 1, got {self.w}")
        if self.x <= 0.0 or self.y <= 0.0:
            raise ValueError("box coordinates must be positive")

    @property
    def x_interval(self) -> Interval:
        return Interval(self.x, self.x + self.w)

    @property
    def y_interval(self) -> Interval:
        return Interval(self.y, self.y + 1.0)


@dataclass(frozen=True)
class BoxInstance:
    """Bounding rectangle spanning (1, 1)..(x_max, y_max) plus boxes and budget."""

    x_max: float
    y_max: float
    k: int
    boxes: tuple


def normalize_formula(formula: CnfFormula) -> CnfFormula:
    """Drop duplicate literals per clause; give every variable both polarities.

    For a variable that never occurs positive (or never negated) the
    always-true clause (v or not v) is appended, leaving satisfiability
    unchanged.
    """
    clauses = []
    for idx, clause in enumerate(formula.clauses):
        seen = []
        for lit in clause:
            if lit not in seen:
                seen.append(lit)
        if not seen:
            raise FormulaError(f"clause {idx} empty after deduplication")
        clauses.append(tuple(seen))
    polarity = {v: [False, False] for v in range(1, formula.num_vars + 1)}
    for clause in clauses:
        for lit in clause:
            polarity[abs(lit)][0 if lit > 0 else 1] = True
    for v in range(1, formula.num_vars + 1):
        pos, neg = polarity[v]
        if not (pos and neg):
            clauses.append((v, -v))
    return CnfFormula(formula.num_vars, tuple(clauses))


def _occurrences(formula: CnfFormula):
    """Per variable: clause indices (1-based, in clause order) per polarity."""
    pos = {v: [] for v in range(1, formula.num_vars + 1)}
    neg = {v: [] for v in range(1, formula.num_vars + 1)}
    for h, clause in enumerate(formula.clauses, start=1):
        for lit in clause:
            (pos if lit > 0 else neg)[abs(lit)].append(h)
    return pos, neg


def clause_size_counts(formula: CnfFormula) -> tuple[int, int, int]:
    """(m1, m2, m3): number of clauses with 1, 2 and 3 literals."""
    counts = [0, 0, 0]
    for clause in formula.clauses:
        counts[len(clause) - 1] += 1
    return tuple(counts)


def build_box_instance(formula: CnfFormula) -> BoxInstance:
    """Place the gadget boxes for a normalized formula.

    Requires every variable to occur in both polarities (run
    :func:`normalize_formula` first). The resulting instance has
    4n + 2*(m1 + 2*m2 + 3*m3) boxes and budget k = 2n + m1 + 2*m2 + 3*m3.
    """
    pos, neg = _occurrences(formula)
    n = formula.num_vars
    m = formula.num_clauses
    for v in range(1, n + 1):
        if not pos[v] or not neg[v]:
            raise FormulaError(f"variable {v} misses a polarity; normalize first")
    a_pos = [len(pos[v]) for v in range(1, n + 1)]
    a_neg = [len(neg[v]) for v in range(1, n + 1)]
    sp = [0]
    for a in a_pos:
        sp.append(sp[-1] + a)
    sn = [0]
    for a in a_neg:
        sn.append(sn[-1] + a)
    sp_n, sn_n = sp[-1], sn[-1]

    boxes = []
    for i in range(1, n + 1):
        boxes.append(LabeledBox(i, i, 1, -i))
        boxes.append(LabeledBox(i, i + n + sp_n, 1, i))
    for i in range(1, n + 1):
        boxes.append(LabeledBox(1 + n + sp[i - 1], i, a_pos[i - 1], i))
        for j in range(1, a_pos[i - 1] + 1):
            boxes.append(LabeledBox(n + sp[i - 1] + j, n + sp[i - 1] + j, 1, -i))
    for i in range(1, n + 1):
        boxes.append(LabeledBox(1 + n + sp_n + sn[i - 1], n + sp_n + i, a_neg[i - 1], -i))
        for j in range(1, a_neg[i - 1] + 1):
            boxes.append(LabeledBox(n + sp_n + sn[i - 1] + j, 2 * n + sp_n + sn[i - 1] + j, 1, i))

    def clause_col(h: int) -> int:
        return n + sp_n + sn_n + h

    for i in range(1, n + 1):
        for j, h in enumerate(pos[i], start=1):
            boxes.append(LabeledBox(clause_col(h), n + sp[i - 1] + j, 1, i))
    for i in range(1, n + 1):
        for j, h in enumerate(neg[i], start=1):
            boxes.append(LabeledBox(clause_col(h), 2 * n + sp_n + sn[i - 1] + j, 1, -i))

    m1, m2, m3 = clause_size_counts(formula)
    occ = m1 + 2 * m2 + 3 * m3
    if len(boxes) != 4 * n + 2 * occ:
        raise RuntimeError("box count does not match the closed form")
    return BoxInstance(
        x_max=float(1 + n + sp_n + sn_n + m),
        y_max=float(1 + 2 * n + sp_n + sn_n),
        k=2 * n + occ,
        boxes=tuple(boxes),
    )


def _integral_instance(instance: BoxInstance) -> bool:
    if not (float(instance.x_max).is_integer() and float(instance.y_max).is_integer()):
        return False
    return all(
        float(b.x).is_integer() and float(b.y).is_integer() and float(b.w).is_integer()
        and 1 <= b.y <= instance.y_max - 1 and 1 <= b.x and b.x + b.w <= instance.x_max
        for b in instance.boxes
    )


def solve_box_bruteforce(instance: BoxInstance, tol: float | None = None):
    """First selection of at most k boxes covering both target boundaries.

    Covering means: the x-projections of the selected boxes cover B's
    bottom edge [1, x_max] and their y-projections cover the left edge
    [1, y_max]. Returns a sorted tuple of box indices, or None.

    On integer-grid instances the search picks one box per unit row of
    the left boundary first (each row must contribute at least one box)
    and backtracks over those choices, spending any remaining budget on
    bottom-edge gaps. Other instances fall back to plain subset
    enumeration, which is only meant for tiny inputs.
    """
    if _integral_instance(instance):
        return _solve_rowwise(instance)
    return _solve_subsets(instance, resolve_tol(tol))


def _solve_rowwise(instance: BoxInstance):
    boxes = instance.boxes
    n_rows = int(instance.y_max) - 1
    n_cols = int(instance.x_max) - 1
    if n_rows < 1 or n_cols < 1:
        return None

    rows = [[] for _ in range(n_rows)]
    col_masks = []
    for idx, b in enumerate(boxes):
        rows[int(b.y) - 1].append(idx)
        mask = 0
        for c in range(int(b.x), int(b.x + b.w)):
            mask |= 1 << (c - 1)
        col_masks.append(mask)
    if any(not opts for opts in rows):
        return None
    if instance.k < n_rows:
        return None
    budget = instance.k - n_rows

    target = (1 << n_cols) - 1
    if target & ~_or_all(col_masks):
        return None

    suffix = [0] * (n_rows + 1)
    for r in range(n_rows - 1, -1, -1):
        suffix[r] = suffix[r + 1] | _or_all(col_masks[i] for i in rows[r])

    chosen: list[int] = []

    def patch_gaps(covered: int):
        """Spend leftover budget on bottom columns still uncovered."""
        missing = target & ~covered
        if not missing:
            return tuple(sorted(chosen))
        if budget == 0:
            return None
        taken = set(chosen)
        pool = [i for i in range(len(boxes)) if i not in taken and col_masks[i] & missing]
        for r in range(1, budget + 1):
            for extra in itertools.combinations(pool, r):
                mask = covered
                for i in extra:
                    mask |= col_masks[i]
                if not (target & ~mask):
                    return tuple(sorted((*chosen, *extra)))
        return None

    def descend(r: int, covered: int):
        if r == n_rows:
            return patch_gaps(covered)
        if budget == 0 and (target & ~covered) & ~suffix[r]:
            return None
        for idx in rows[r]:
            chosen.append(idx)
            result = descend(r + 1, covered | col_masks[idx])
            if result is not None:
                return result
            chosen.pop()
        return None

    return descend(0, 0)


def _or_all(masks) -> int:
    out = 0
    for m in masks:
        out |= m
    return out


def _solve_subsets(instance: BoxInstance, tol: float):
    boxes = instance.boxes
    if len(boxes) > 22:
        raise ValueError("non-integral instance too large for subset enumeration")
    bottom = Interval(1.0, float(instance.x_max))
    left = Interval(1.0, float(instance.y_max))
    ids = range(len(boxes))
    for size in range(min(instance.k, len(boxes)) + 1):
        for combo in itertools.combinations(ids, size):
            if interval_union_covers([boxes[i].x_interval for i in combo], bottom, tol) and \
               interval_union_covers([boxes[i].y_interval for i in combo], left, tol):
                return tuple(combo)
    return None


def sat_bruteforce(formula: CnfFormula):
    """Exhaustive satisfying assignment search, or None. Needs n <= 20."""
    n = formula.num_vars
    if n > 20:
        raise ValueError(f"too many variables for brute force: {n} > 20")
    for mask in range(1 << n):
        assignment = {v: bool(mask >> (v - 1) & 1) for v in range(1, n + 1)}
        if all(
            any(assignment[abs(lit)] == (lit > 0) for lit in clause)
            for clause in formula.clauses
        ):
            return assignment
    return None


def selection_from_assignment(instance: BoxInstance, assignment: dict) -> tuple:
    """Box indices implied by a truth assignment.

    Picks every box labelled v with v true and every box labelled -v with
    v false; for a satisfying assignment of the source formula this
    selection has size exactly k and covers both boundaries.
    """
    return tuple(
        idx for idx, b in enumerate(instance.boxes)
        if assignment[abs(b.label)] == (b.label > 0)
    )


def covers_boundaries(instance: BoxInstance, indices, tol: float | None = None) -> bool:
    """Whether the given boxes cover B's bottom and left boundary."""
    tol = resolve_tol(tol)
    chosen = [instance.boxes[i] for i in indices]
    return (
        interval_union_covers([b.x_interval for b in chosen], Interval(1.0, float(instance.x_max)), tol)
        and interval_union_covers([b.y_interval for b in chosen], Interval(1.0, float(instance.y_max)), tol)
    )


def parse_dimacs(text: str) -> CnfFormula:
    """Parse DIMACS CNF (``p cnf <vars> <clauses>`` header, 0-terminated clauses)."""
    num_vars = None
    declared = None
    tokens: list[int] = []
    for line in text.splitlines():
        stripped = line.strip()
        if not stripped or stripped.startswith("c") or stripped.startswith("%"):
            continue
        if stripped.startswith("p"):
            parts = stripped.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise FormulaError(f"bad problem line: {stripped!r}")
            num_vars, declared = int(parts[2]), int(parts[3])
            continue
        try:
            tokens.extend(int(t) for t in stripped.split())
        except ValueError as exc:
            raise FormulaError(f"bad clause line: {stripped!r}") from exc
    if num_vars is None:
        raise FormulaError("missing 'p cnf' header")
    clauses = []
    current: list[int] = []
    for tok in tokens:
        if tok == 0:
            if current:
                clauses.append(tuple(current))
                current = []
        else:
            current.append(tok)
    if current:
        raise FormulaError("last clause not terminated by 0")
    if declared is not None and declared != len(clauses):
        raise FormulaError(f"header declares {declared} clauses, found {len(clauses)}")
    return CnfFormula(num_vars, tuple(clauses))


def write_dimacs(formula: CnfFormula) -> str:
    lines = [f"p cnf {formula.num_vars} {formula.num_clauses}"]
    lines.extend(" ".join(str(l) for l in clause) + " 0" for clause in formula.clauses)
    return "\n".join(lines) + "\n"


def box_instance_to_json(instance: BoxInstance) -> dict:
    return {
        "bound": [instance.x_max, instance.y_max],
        "k": instance.k,
        "boxes": [
            {"x": b.x, "y": b.y, "w": b.w, "label": b.label}
            for b in instance.boxes
        ],
    }


def box_instance_from_json(obj: dict) -> BoxInstance:
    try:
        x_max, y_max = obj["bound"]
        boxes = tuple(
            LabeledBox(float(b["x"]), float(b["y"]), float(b["w"]), int(b["label"]))
            for b in obj["boxes"]
        )
        return BoxInstance(x_max=float(x_max), y_max=float(y_max), k=int(obj["k"]), boxes=boxes)
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed box instance JSON: {exc}") from exc
