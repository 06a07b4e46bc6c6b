"""The bijections gamma, theta and varphi, built from phi_i, rho_i and t_i.

``varphi`` maps every row-equivalence class onto itself and carries
(inv, maj) to (quinv, maj). On rectangles ``theta`` exchanges inv and quinv
while fixing maj.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .filling import ZERO, Filling, FillingError, is_rectangle, rectangle_decomposition, split_reverse_join, to_document
from .operators import TraceStep, is_compatible, phi, rho, row_swap
from .stats import inv, quinv


def kappa(sigma: Filling) -> int:
    """Sum over maximal rectangles of quinv(block) - inv(reversed block)."""
    total = 0
    for block in rectangle_decomposition(sigma.shape):
        piece = sigma.sub_block(block)
        total += quinv(piece) - inv(split_reverse_join(piece))
    return total


@dataclass
class BijectionTrace:
    name: str
    input: Filling
    output: Filling | None = None
    steps: list[TraceStep] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "bijection": self.name,
            "input": to_document(self.input)["rows_top_to_bottom"],
            "output": to_document(self.output)["rows_top_to_bottom"] if self.output else None,
            "steps": [s.to_dict() for s in self.steps],
        }


def _record(trace, op, column, rows, before, after, **params):
    if trace is not None:
        trace.append(TraceStep(op, column, rows, before, after, params))
    return after


def _top_pair(sigma: Filling, j: int) -> tuple[int, int]:
    top = sigma.rows[-1]
    return top[j - 1], top[j]


def _move_zero(alpha: Filling, j: int, trace) -> Filling:
    """Move the zero at top-row column j one column to the right."""
    m = alpha.nrows
    assert is_compatible(alpha, j), f"column {j} of the padded filling is not compatible"
    e, v = alpha.rows[-1][j], alpha.rows[-2][j]
    before = _top_pair(alpha, j)
    out = phi(alpha, j, trace)
    exchanged = _top_pair(out, j) != before
    if e > v:
        if not exchanged:
            out = _record(trace, "t", j, ((m, m),), out, row_swap(out, j, m))
    else:
        flip = rho(out, j)
        assert not flip.undefined and flip.start_row == m, f"rho_{j} did not start at the top row"
        out = _record(trace, "rho", j, ((flip.end_row, flip.start_row),), out, flip.filling, start=m)
        if exchanged:
            out = _record(trace, "t", j, ((m, m),), out, row_swap(out, j, m))
    assert out.rows[-1][j - 1] != ZERO and out.rows[-1][j] == ZERO
    return out


def _insert_row(current: Filling | None, row: tuple[int, ...], index: int, trace) -> Filling:
    """One recursion step: put ``row`` (top row of the input) on top of gamma of the rows below."""
    s = len(row)
    if current is None:
        return _record(trace, "push", None, (), Filling(()), Filling((row[::-1],)), row=index, zeros=0)
    n = len(current.rows[-1])
    if s == n:
        return _record(trace, "push", None, (), current, current.push_row(row[::-1]), row=index, zeros=0)
    alpha = current.push_row((ZERO,) * (n - s) + row[::-1], padded=True)
    alpha = _record(trace, "push", None, (), current, alpha, row=index, zeros=n - s)
    while True:
        top = alpha.rows[-1]
        # rightmost zero that still has a positive entry to its right
        j = next((c for c in range(n - 1, 0, -1) if top[c - 1] == ZERO and top[c] != ZERO), None)
        if j is None:
            break
        alpha = _move_zero(alpha, j, trace)
    top = alpha.rows[-1]
    assert top == row[::-1] + (ZERO,) * (n - s), f"zeros not transported: {top}"
    done = alpha.with_rows(alpha.rows[:-1] + (row[::-1],), padded=False)
    return _record(trace, "drop_zeros", None, (), alpha, done)


def gamma(sigma: Filling, trace: BijectionTrace | None = None) -> Filling:
    """Rebuild sigma row by row from the bottom, reversing each new top row."""
    if sigma.padded:
        raise FillingError("gamma expects an unpadded filling")
    steps = trace.steps if trace is not None else None
    current = None if sigma.nrows else sigma
    for index, row in enumerate(sigma.rows, start=1):
        current = _insert_row(current, row, index, steps)
    if trace is not None:
        trace.output = current
    return current


def _phi_passes(pi: Filling, col_start: int, width: int, steps) -> Filling:
    for first in range(1, width):
        for i in range(width - 1, first - 1, -1):
            pi = phi(pi, col_start + i - 1, steps)
    return pi


def theta(sigma: Filling, trace: BijectionTrace | None = None) -> Filling:
    """Reverse, then sweep phi_{n-1}..phi_j for j = 1..n-1 on a rectangle."""
    if not is_rectangle(sigma.shape):
        raise FillingError(f"theta needs a rectangular shape, got {sigma.shape}")
    steps = trace.steps if trace is not None else None
    pi = _record(steps, "reverse", None, (), sigma, split_reverse_join(sigma))
    pi = _phi_passes(pi, 1, sigma.ncols, steps)
    if trace is not None:
        trace.output = pi
    return pi


def varphi(sigma: Filling, trace: BijectionTrace | None = None) -> Filling:
    """gamma followed by theta(block reversed) on each maximal rectangle."""
    steps = trace.steps if trace is not None else None
    tau = gamma(sigma, BijectionTrace("gamma", sigma, steps=steps) if trace is not None else None)
    pi = tau
    # theta(block^r) begins by reversing block^r, so the phi passes run on the block itself;
    # phi_i only reads columns i and i+1, so each block can be processed in place.
    for block in rectangle_decomposition(tau.shape):
        pi = _phi_passes(pi, block.col_start, block.width, steps)
    if trace is not None:
        trace.output = pi
    return pi


BIJECTIONS = {"gamma": gamma, "theta": theta, "varphi": varphi}


def replay(trace: BijectionTrace) -> Filling:
    """Re-apply the recorded steps to the trace input."""
    from .operators import range_swap

    source = trace.input
    state = None
    for step in trace.steps:
        if step.op == "push":
            row = source.rows[step.params["row"] - 1][::-1]
            base = state if state is not None else Filling(())
            zeros = step.params["zeros"]
            state = base.push_row((ZERO,) * zeros + row, padded=bool(zeros))
        elif step.op == "reverse":
            state = split_reverse_join(source if state is None else state)
        elif step.op == "drop_zeros":
            state = state.with_rows(
                state.rows[:-1] + (tuple(x for x in state.rows[-1] if x != ZERO),), padded=False
            )
        elif step.op == "phi":
            state = phi(state, step.column)
        elif step.op in ("t", "rho"):
            (lo, hi), = step.rows
            state = range_swap(state, step.column, lo, hi)
        else:
            raise ValueError(f"unknown trace step {step.op!r}")
        if state != step.after:
            raise AssertionError(f"replay diverged at step {step.op} column {step.column}")
    return source if state is None else state
