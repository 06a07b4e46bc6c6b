"""Partitions, fillings of Young diagrams and their text/JSON formats.

Conventions: rows are numbered from 1 at the bottom (French), columns from 1
at the left. Entries are plain ints; ``ZERO`` (0) and ``INF`` are the two
sentinels that sit below every positive entry and above every entry.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, NamedTuple, Sequence

ZERO = 0
INF = math.inf

Partition = tuple[int, ...]


class FillingError(ValueError):
    """Raised for malformed shapes, entries or serialized fillings."""


def validate_partition(parts: Iterable[int]) -> Partition:
    parts = tuple(parts)
    for p in parts:
        if not isinstance(p, int) or p < 1:
            raise FillingError(f"partition parts must be positive integers, got {parts}")
    for x, y in zip(parts, parts[1:]):
        if x < y:
            raise FillingError(f"partition parts must be weakly decreasing, got {parts}")
    return parts


def conjugate(shape: Sequence[int]) -> Partition:
    """Column lengths of ``shape``: ``result[j] = #{i : shape[i] > j}``."""
    if not shape:
        return ()
    return tuple(sum(1 for p in shape if p > j) for j in range(shape[0]))


def partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def is_rectangle(shape: Sequence[int]) -> bool:
    return len(set(shape)) <= 1


class Block(NamedTuple):
    """Maximal rectangle of a diagram: columns ``col_start .. col_start+width-1``."""

    col_start: int
    width: int
    height: int


def rectangle_decomposition(shape: Sequence[int]) -> tuple[Block, ...]:
    """Split dg(shape) into maximal rectangles of strictly decreasing height."""
    blocks: list[Block] = []
    for col, h in enumerate(conjugate(shape), start=1):
        if blocks and blocks[-1].height == h:
            last = blocks[-1]
            blocks[-1] = Block(last.col_start, last.width + 1, h)
        else:
            blocks.append(Block(col, 1, h))
    return tuple(blocks)


@dataclass(frozen=True)
class Filling:
    """A filling of a Young diagram, stored bottom row first.

    ``padded`` fillings may hold ``ZERO`` entries; they only appear as
    intermediate states of the gamma construction.
    """

    rows: tuple[tuple[int, ...], ...]
    padded: bool = False
    shape: Partition = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        lo = 0 if self.padded else 1
        for row in rows:
            if not row:
                raise FillingError("rows must be non-empty")
            for x in row:
                if not isinstance(x, int) or isinstance(x, bool) or x < lo:
                    raise FillingError(f"invalid entry {x!r}")
        shape = tuple(len(r) for r in rows)
        try:
            validate_partition(shape)
        except FillingError:
            raise FillingError(
                f"row lengths read bottom-up {shape} do not form a partition"
            ) from None
        object.__setattr__(self, "shape", shape)

    @classmethod
    def from_top_rows(cls, rows_top_to_bottom: Sequence[Sequence[int]], padded: bool = False) -> Filling:
        return cls(tuple(tuple(r) for r in reversed(rows_top_to_bottom)), padded)

    @cached_property
    def heights(self) -> Partition:
        """Column heights (the conjugate partition)."""
        return conjugate(self.shape)

    @property
    def size(self) -> int:
        return sum(self.shape)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return self.shape[0] if self.shape else 0

    def __contains__(self, cell: tuple[int, int]) -> bool:
        r, c = cell
        return 1 <= r <= len(self.rows) and 1 <= c <= len(self.rows[r - 1])

    def __getitem__(self, cell: tuple[int, int]) -> int:
        r, c = cell
        if (r, c) not in self:
            raise IndexError(f"cell {cell} is outside the diagram of shape {self.shape}")
        return self.rows[r - 1][c - 1]

    def at(self, r: int, c: int) -> float:
        """Extended read: ``INF`` below the bottom row, ``ZERO`` above each column top."""
        if not 1 <= c <= self.ncols:
            raise IndexError(f"column {c} is outside the diagram")
        h = self.heights[c - 1]
        if r == 0:
            return INF
        if r == h + 1:
            return ZERO
        if 1 <= r <= h:
            return self.rows[r - 1][c - 1]
        raise IndexError(f"row {r} is outside column {c} of height {h}")

    def column(self, c: int) -> tuple[int, ...]:
        """Entries of column ``c``, bottom to top."""
        return tuple(self.rows[r][c - 1] for r in range(self.heights[c - 1]))

    def with_rows(self, rows: Iterable[Sequence[int]], padded: bool | None = None) -> Filling:
        return Filling(tuple(tuple(r) for r in rows), self.padded if padded is None else padded)

    def push_row(self, row: Sequence[int], padded: bool | None = None) -> Filling:
        return self.with_rows(self.rows + (tuple(row),), padded)

    def sub_block(self, block: Block) -> Filling:
        """The rectangle filling occupying ``block``."""
        lo = block.col_start - 1
        return self.with_rows(r[lo:lo + block.width] for r in self.rows[:block.height])

    def __str__(self) -> str:
        return serialize(self)


def _reverse_blocks(rows: Sequence[Sequence[int]], blocks: Sequence[Block]) -> tuple[tuple[int, ...], ...]:
    out = []
    for r, row in enumerate(rows, start=1):
        new = list(row)
        for b in blocks:
            if b.height >= r:
                lo = b.col_start - 1
                new[lo:lo + b.width] = new[lo:lo + b.width][::-1]
        out.append(tuple(new))
    return tuple(out)


def split_reverse_join(sigma: Filling) -> Filling:
    """Reverse every row inside each maximal rectangle independently."""
    return sigma.with_rows(_reverse_blocks(sigma.rows, rectangle_decomposition(sigma.shape)))


def transpose(sigma: Filling) -> Filling:
    if sigma.padded:
        raise FillingError("cannot transpose a padded filling")
    return Filling(sigma.column(c) for c in range(1, sigma.ncols + 1))


def row_class_signature(sigma: Filling) -> tuple[tuple[int, ...], ...]:
    """Sorted entries of each row, bottom to top; equal iff row-equivalent."""
    return tuple(tuple(sorted(r)) for r in sigma.rows)


def row_equivalent(a: Filling, b: Filling) -> bool:
    return a.shape == b.shape and row_class_signature(a) == row_class_signature(b)


# -- serialization ---------------------------------------------------------


def parse(text: str, allow_zero: bool = False) -> Filling:
    """Parse the text format: one row per line, top row first.

    >>> parse("3\\n4 1 2\\n3 3 3").shape
    (3, 3, 1)
    """
    lines = text.strip().splitlines()
    if not lines:
        raise FillingError("empty filling")
    rows = []
    for line in lines:
        tokens = line.split()
        if not tokens:
            raise FillingError("blank line inside filling")
        try:
            rows.append([int(tok, 10) for tok in tokens])
        except ValueError:
            raise FillingError(f"non-integer entry in line {line!r}") from None
    return Filling.from_top_rows(rows, padded=allow_zero)


def serialize(sigma: Filling) -> str:
    return "\n".join(" ".join(str(x) for x in row) for row in reversed(sigma.rows))


def to_document(sigma: Filling) -> dict:
    return {"rows_top_to_bottom": [list(r) for r in reversed(sigma.rows)]}


def from_document(doc: dict, allow_zero: bool = False) -> Filling:
    try:
        rows = doc["rows_top_to_bottom"]
    except (KeyError, TypeError):
        raise FillingError("document lacks 'rows_top_to_bottom'") from None
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise FillingError("'rows_top_to_bottom' must be an array of arrays")
    return Filling.from_top_rows(rows, padded=allow_zero)


def serialize_json(sigma: Filling) -> str:
    return json.dumps(to_document(sigma), sort_keys=True)


def parse_json(text: str, allow_zero: bool = False) -> Filling:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FillingError(f"invalid JSON: {exc}") from None
    return from_document(doc, allow_zero)


def parse_any(text: str) -> Filling:
    """Text or JSON, decided by the first non-blank character."""
    if text.lstrip().startswith("{"):
        return parse_json(text)
    return parse(text)
