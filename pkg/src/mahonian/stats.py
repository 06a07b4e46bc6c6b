"""Descent and triple statistics on fillings: maj, inv, quinv, Ndes."""

from __future__ import annotations

from dataclasses import dataclass

from .filling import INF, ZERO, Filling


def triple_indicator(a: float, b: float, c: float) -> int:
    """1 iff ``a<b<c``, ``b<c<a``, ``c<a<b`` or ``a=b!=c``.

    Serves both inversion triples (``a`` above ``b``, ``c`` right of ``a``)
    and queue inversion triples (``a`` above ``b``, ``c`` right of ``b``).
    """
    if a < b < c or b < c < a or c < a < b:
        return 1
    return 1 if a == b != c else 0


Q = triple_indicator


def maj(sigma: Filling) -> int:
    total = 0
    rows = sigma.rows
    for c, h in enumerate(sigma.heights):
        for r in range(1, h):
            if rows[r][c] > rows[r - 1][c]:
                # leg + 1 for a cell at 0-based height r in a column of height h
                total += h - r
    return total


def des(sigma: Filling) -> int:
    rows = sigma.rows
    return sum(
        1
        for c, h in enumerate(sigma.heights)
        for r in range(1, h)
        if rows[r][c] > rows[r - 1][c]
    )


def inv(sigma: Filling) -> int:
    total = 0
    rows = sigma.rows
    for r, row in enumerate(rows):
        below = rows[r - 1] if r else None
        n = len(row)
        for i in range(n - 1):
            a = row[i]
            b = below[i] if below is not None else INF
            for j in range(i + 1, n):
                total += Q(a, b, row[j])
    return total


def quinv(sigma: Filling) -> int:
    total = 0
    rows = sigma.rows
    nrows = len(rows)
    for r, row in enumerate(rows):
        above = rows[r + 1] if r + 1 < nrows else ()
        n = len(row)
        for i in range(n - 1):
            a = above[i] if i < len(above) else ZERO
            b = row[i]
            for j in range(i + 1, n):
                total += Q(a, b, row[j])
    return total


def ndes_vector(sigma: Filling) -> tuple[int, ...]:
    """Non-descents per column; sentinel pairs are not counted."""
    rows = sigma.rows
    return tuple(
        sum(1 for r in range(1, h) if rows[r][c] <= rows[r - 1][c])
        for c, h in enumerate(sigma.heights)
    )


@dataclass(frozen=True)
class StatBundle:
    maj: int
    inv: int
    quinv: int
    des: int
    ndes_vector: tuple[int, ...]

    @property
    def ndes(self) -> int:
        return sum(self.ndes_vector)

    def as_dict(self) -> dict:
        return {
            "maj": self.maj,
            "inv": self.inv,
            "quinv": self.quinv,
            "des": self.des,
            "ndes": list(self.ndes_vector),
        }

    def __str__(self) -> str:
        ndes = ",".join(map(str, self.ndes_vector))
        return f"maj={self.maj} inv={self.inv} quinv={self.quinv} des={self.des} ndes=({ndes})"


def stat_bundle(sigma: Filling) -> StatBundle:
    return StatBundle(maj(sigma), inv(sigma), quinv(sigma), des(sigma), ndes_vector(sigma))


STATISTICS = {"maj": maj, "inv": inv, "quinv": quinv, "des": des}
