"""Column-pair operators: row swaps, flip operators, descent blocks and phi_i.

All operators act on columns ``i`` and ``i+1`` of equal height (``i`` is
then called compatible with the shape). Rows and columns are 1-based.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Sequence

from .filling import Filling
from .stats import Q


class OperatorError(ValueError):
    pass


class Side(str, enum.Enum):
    LEFT = "left"
    RIGHT = "right"
    NEUTRAL = "neutral"


class Kind(str, enum.Enum):
    A = "A"
    B = "B"
    C = "C"
    NOT_DESCENT = "not-descent"


# Twelve clauses over (a, b, c, d) = (top-left, top-right, bottom-left, bottom-right).
KIND_CLAUSES = {
    Kind.A: (
        lambda a, b, c, d: d >= b >= a > c,
        lambda a, b, c, d: d >= a > b > c,
        lambda a, b, c, d: c >= b >= a > d,
        lambda a, b, c, d: c >= a > b > d,
    ),
    Kind.B: (
        lambda a, b, c, d: a > c >= d >= b,
        lambda a, b, c, d: a > d > c >= b,
        lambda a, b, c, d: b > c >= d >= a,
        lambda a, b, c, d: b > d > c >= a,
    ),
    Kind.C: (
        lambda a, b, c, d: a > d >= b > c,
        lambda a, b, c, d: d >= a > c >= b,
        lambda a, b, c, d: b > c >= a > d,
        lambda a, b, c, d: c >= b > d >= a,
    ),
}


def block_side(a, b, c, d) -> Side:
    left, right = a > c, b > d
    if left and not right:
        return Side.LEFT
    if right and not left:
        return Side.RIGHT
    return Side.NEUTRAL


def matching_kinds(a, b, c, d) -> tuple[Kind, ...]:
    return tuple(k for k, clauses in KIND_CLAUSES.items() if any(f(a, b, c, d) for f in clauses))


def block_kind(a, b, c, d) -> Kind:
    if block_side(a, b, c, d) is Side.NEUTRAL:
        return Kind.NOT_DESCENT
    kinds = matching_kinds(a, b, c, d)
    if len(kinds) != 1:
        raise AssertionError(f"descent block {(a, b, c, d)} matches kinds {kinds}")
    return kinds[0]


@dataclass(frozen=True)
class DescentBlock:
    """The 2x2 window on columns (i, i+1) and rows (r, r+1)."""

    col: int
    row: int
    a: float
    b: float
    c: float
    d: float
    side: Side
    kind: Kind

    @property
    def is_descent(self) -> bool:
        return self.side is not Side.NEUTRAL


@dataclass(frozen=True)
class FlipResult:
    filling: Filling
    start_row: int | None
    end_row: int | None
    identity: bool
    # set when the columns differ only above the requested starting row
    undefined: bool = False


@dataclass(frozen=True)
class TraceStep:
    """One operator application, serializable for traces."""

    op: str
    column: int | None
    rows: tuple[tuple[int, int], ...]
    before: Filling
    after: Filling
    params: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        from .filling import to_document

        return {
            "op": self.op,
            "column": self.column,
            "rows": [list(r) for r in self.rows],
            "params": dict(sorted(self.params.items())),
            "before": to_document(self.before)["rows_top_to_bottom"],
            "after": to_document(self.after)["rows_top_to_bottom"],
        }


def is_compatible(sigma: Filling, i: int) -> bool:
    h = sigma.heights
    return 1 <= i < len(h) and h[i - 1] == h[i] >= 1


def compatible_columns(sigma: Filling) -> list[int]:
    return [i for i in range(1, sigma.ncols) if is_compatible(sigma, i)]


def _check_column(sigma: Filling, i: int) -> int:
    if not is_compatible(sigma, i):
        raise OperatorError(f"column {i} is not compatible with shape {sigma.shape}")
    return sigma.heights[i - 1]


def _swapped(sigma: Filling, i: int, lo: int, hi: int) -> Filling:
    rows = [list(r) for r in sigma.rows]
    for r in range(lo - 1, hi):
        rows[r][i - 1], rows[r][i] = rows[r][i], rows[r][i - 1]
    return sigma.with_rows(rows)


def row_swap(sigma: Filling, i: int, r: int) -> Filling:
    """Exchange the entries at (r, i) and (r, i+1)."""
    h = _check_column(sigma, i)
    if not 1 <= r <= h:
        raise OperatorError(f"row {r} out of range 1..{h}")
    return _swapped(sigma, i, r, r)


def range_swap(sigma: Filling, i: int, r: int, s: int) -> Filling:
    """Exchange columns i and i+1 on every row r..s."""
    h = _check_column(sigma, i)
    if not 1 <= r <= s <= h:
        raise OperatorError(f"row range [{r},{s}] out of range 1..{h}")
    return _swapped(sigma, i, r, s)


def _balanced(sigma: Filling, i: int, j: int) -> bool:
    """Whether row j of columns (i, i+1) sees the same Q-value over row j-1."""
    c, d = sigma.at(j - 1, i), sigma.at(j - 1, i + 1)
    return Q(sigma.at(j, i), c, d) == Q(sigma.at(j, i + 1), c, d)


def rho(sigma: Filling, i: int, r: int | None = None) -> FlipResult:
    """The flip operator starting at or below row r (default: the top row)."""
    h = _check_column(sigma, i)
    if r is None:
        r = h
    if not 1 <= r <= h:
        raise OperatorError(f"row {r} out of range 1..{h}")
    rows = sigma.rows
    differs = [rows[x][i - 1] != rows[x][i] for x in range(h)]
    if not any(differs):
        return FlipResult(sigma, None, None, True)
    k = next((x for x in range(r, 0, -1) if differs[x - 1]), None)
    if k is None:
        return FlipResult(sigma, None, None, True, undefined=True)
    end = next(x for x in range(k, 0, -1) if differs[x - 1] and _balanced(sigma, i, x))
    return FlipResult(_swapped(sigma, i, end, k), k, end, False)


def classify_block(sigma: Filling, i: int, r: int) -> DescentBlock:
    """Descent block on rows (r, r+1); r = 0 or r = height uses sentinel rows."""
    h = _check_column(sigma, i)
    if not 0 <= r <= h:
        raise OperatorError(f"block row {r} out of range 0..{h}")
    a, b = sigma.at(r + 1, i), sigma.at(r + 1, i + 1)
    c, d = sigma.at(r, i), sigma.at(r, i + 1)
    if r == 0 or r == h:
        return DescentBlock(i, r, a, b, c, d, Side.NEUTRAL, Kind.NOT_DESCENT)
    return DescentBlock(i, r, a, b, c, d, block_side(a, b, c, d), block_kind(a, b, c, d))


def epsilon(sigma: Filling, block: DescentBlock) -> tuple[int, int]:
    """Parameters (i, kappa) of the flip operator rho_i^kappa attached to a descent block."""
    if not block.is_descent:
        raise OperatorError("epsilon is defined on descent blocks only")
    i, r = block.col, block.row
    if block.kind is Kind.A:
        return i, r
    h = sigma.heights[i - 1]
    target = int(block.a <= block.c)
    for kappa in range(r + 1, h + 1):
        c, d = sigma.at(kappa, i), sigma.at(kappa, i + 1)
        if Q(sigma.at(kappa + 1, i), c, d) == Q(sigma.at(kappa + 1, i + 1), c, d) == target:
            return i, kappa
    raise AssertionError(f"no kappa for descent block at rows ({r},{r + 1}), column {i}")


def components(sigma: Filling, i: int) -> list[tuple[int, int]]:
    """Row intervals (low, high) of the components of columns i, i+1, top to bottom."""
    h = _check_column(sigma, i)
    cuts = [j for j in range(1, h + 1) if j == 1 or _balanced(sigma, i, j)]
    bounds = cuts + [h + 1]
    return [(bounds[m], bounds[m + 1] - 1) for m in range(len(cuts))][::-1]


def _flipped_components(sigma: Filling, i: int) -> list[tuple[int, int]]:
    h = sigma.heights[i - 1]
    flips = []
    for low, high in components(sigma, i):
        top = classify_block(sigma, i, high)
        bottom = classify_block(sigma, i, low - 1)
        lo = low - (bottom.kind is Kind.B)
        hi = high + (top.kind is Kind.A)
        members = [
            blk
            for r in range(max(lo, 1), min(hi - 1, h - 1) + 1)
            if (blk := classify_block(sigma, i, r)).is_descent
        ]
        if len(members) % 2:
            # the topmost member's flip operator must be exactly this component
            col, kappa = epsilon(sigma, members[-1])
            flip = rho(sigma, col, kappa)
            assert (flip.start_row, flip.end_row) == (high, low), (
                f"epsilon flip {(flip.end_row, flip.start_row)} != component {(low, high)}"
            )
            flips.append((low, high))
    return flips


def phi(sigma: Filling, i: int, trace: list[TraceStep] | None = None) -> Filling:
    """The involution swapping the non-descent counts of columns i and i+1."""
    _check_column(sigma, i)
    flips = _flipped_components(sigma, i)
    out = sigma
    for low, high in flips:
        out = _swapped(out, i, low, high)
    if trace is not None:
        trace.append(TraceStep("phi", i, tuple(sorted(flips)), sigma, out))
    return out


def apply_rows_swaps(sigma: Filling, i: int, intervals: Sequence[tuple[int, int]]) -> Filling:
    for lo, hi in intervals:
        sigma = range_swap(sigma, i, lo, hi)
    return sigma

