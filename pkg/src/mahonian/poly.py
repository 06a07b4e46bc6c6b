"""Sparse integer polynomials in q, t, u and the generating functions built on them."""

from __future__ import annotations

import itertools
from collections import Counter
from typing import Iterable, Iterator, Mapping, Sequence

from .filling import Filling, FillingError, row_class_signature
from .stats import STATISTICS

VARS = ("q", "t", "u")

DEFAULT_BUDGET = 10**6

Exponent = tuple[int, int, int]


class BudgetExceeded(RuntimeError):
    """An enumeration would visit more objects than its budget allows."""


class GenPoly:
    """Immutable polynomial in q, t, u with integer coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Exponent, int] | None = None):
        clean = {}
        for exp, coeff in (terms or {}).items():
            if len(exp) != 3 or any(e < 0 for e in exp):
                raise ValueError(f"bad exponent {exp}")
            if coeff:
                clean[tuple(exp)] = clean.get(tuple(exp), 0) + coeff
        self._terms = {e: c for e, c in clean.items() if c}

    @classmethod
    def monomial(cls, q: int = 0, t: int = 0, u: int = 0, coeff: int = 1) -> GenPoly:
        return cls({(q, t, u): coeff})

    @classmethod
    def constant(cls, c: int) -> GenPoly:
        return cls({(0, 0, 0): c})

    @classmethod
    def from_counter(cls, counts: Counter) -> GenPoly:
        return cls(dict(counts))

    @property
    def terms(self) -> dict[Exponent, int]:
        return dict(self._terms)

    def __iter__(self) -> Iterator[tuple[Exponent, int]]:
        return iter(sorted(self._terms.items(), reverse=True))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = GenPoly.constant(other)
        if not isinstance(other, GenPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: GenPoly | int) -> GenPoly:
        if isinstance(other, int):
            other = GenPoly.constant(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return GenPoly(out)

    __radd__ = __add__

    def __neg__(self) -> GenPoly:
        return GenPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: GenPoly | int) -> GenPoly:
        return self + (-other if isinstance(other, GenPoly) else GenPoly.constant(-other))

    def __mul__(self, other: GenPoly | int) -> GenPoly:
        if isinstance(other, int):
            return GenPoly({e: c * other for e, c in self._terms.items()})
        out: dict[Exponent, int] = {}
        for (a1, b1, c1), x in self._terms.items():
            for (a2, b2, c2), y in other._terms.items():
                e = (a1 + a2, b1 + b2, c1 + c2)
                out[e] = out.get(e, 0) + x * y
        return GenPoly(out)

    __rmul__ = __mul__

    def substitute(self, **assign: str | int) -> GenPoly:
        """Replace variables by another variable name or by 1, e.g. ``substitute(u="t", q=1)``."""
        for var, val in assign.items():
            if var not in VARS or not (val == 1 or val in VARS):
                raise ValueError(f"unsupported substitution {var}:={val}")
        out: dict[Exponent, int] = {}
        for exp, c in self._terms.items():
            new = [0, 0, 0]
            for k, var in enumerate(VARS):
                val = assign.get(var, var)
                if val != 1:
                    new[VARS.index(val)] += exp[k]
            key = tuple(new)
            out[key] = out.get(key, 0) + c
        return GenPoly(out)

    def swap(self, x: str, y: str) -> GenPoly:
        i, j = VARS.index(x), VARS.index(y)
        out = {}
        for exp, c in self._terms.items():
            e = list(exp)
            e[i], e[j] = e[j], e[i]
            out[tuple(e)] = c
        return GenPoly(out)

    def coefficients(self, var: str) -> list[int]:
        """Coefficient list in one variable, assuming the others are absent."""
        k = VARS.index(var)
        if not self._terms:
            return []
        top = max(e[k] for e in self._terms)
        out = [0] * (top + 1)
        for e, c in self._terms.items():
            if any(e[m] for m in range(3) if m != k):
                raise ValueError(f"polynomial is not univariate in {var}")
            out[e[k]] += c
        return out

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for exp, c in self:
            factors = [v if e == 1 else f"{v}^{e}" for v, e in zip(VARS, exp) if e]
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            parts.append(("-" if c < 0 else "+", body))
        sign, body = parts[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"GenPoly({self})"


def gaussian_binomial(n: int, k: int) -> GenPoly:
    """[n choose k]_t via the recurrence [n,k] = [n-1,k-1] + t^k [n-1,k]."""
    if k < 0 or k > n:
        return GenPoly()
    row = [GenPoly.constant(1)]
    for m in range(1, n + 1):
        new = []
        for j in range(min(m, k) + 1):
            left = row[j - 1] if j >= 1 else GenPoly()
            right = row[j] * GenPoly.monomial(t=j) if j < len(row) else GenPoly()
            new.append(left + right)
        row = new
    return row[k]


def t_multinomial(multiplicities: Sequence[int]) -> GenPoly:
    """t-multinomial coefficient as a product of Gaussian binomials."""
    out = GenPoly.constant(1)
    total = 0
    for a in multiplicities:
        if a < 0:
            raise ValueError("multiplicities must be nonnegative")
        total += a
        out = out * gaussian_binomial(total, a)
    return out


def row_multiplicities(row: Iterable[int]) -> list[int]:
    counts = Counter(row)
    return [counts[v] for v in sorted(counts)]


def invq_product(sigma: Filling) -> GenPoly:
    """Product over rows of the t-multinomial of the row's entry multiplicities."""
    out = GenPoly.constant(1)
    for row in sigma.rows:
        out = out * t_multinomial(row_multiplicities(row))
    return out


# -- class enumeration -----------------------------------------------------


def _multiset_permutations(items: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Distinct permutations in lexicographic order (next-permutation walk)."""
    a = sorted(items)
    n = len(a)
    while True:
        yield tuple(a)
        i = n - 2
        while i >= 0 and a[i] >= a[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while a[j] <= a[i]:
            j -= 1
        a[i], a[j] = a[j], a[i]
        a[i + 1:] = reversed(a[i + 1:])


def _multinomial_count(row: Sequence[int]) -> int:
    from math import factorial

    out = factorial(len(row))
    for m in Counter(row).values():
        out //= factorial(m)
    return out


def class_size(sigma: Filling) -> int:
    size = 1
    for row in sigma.rows:
        size *= _multinomial_count(row)
    return size


def enumerate_row_class(sigma: Filling, budget: int = DEFAULT_BUDGET) -> Iterator[Filling]:
    """Every filling row-equivalent to sigma, lexicographic in the bottom-up row concatenation."""
    if sigma.padded:
        raise FillingError("row classes are defined for unpadded fillings")
    size = class_size(sigma)
    if size > budget:
        raise BudgetExceeded(f"row class has {size} fillings, budget is {budget}")
    per_row = [list(_multiset_permutations(r)) for r in row_class_signature(sigma)]
    for rows in itertools.product(*per_row):
        yield Filling(rows)


def _weights_key(weights: Mapping[str, str]) -> list[tuple[str, int]]:
    out = []
    for stat, var in weights.items():
        if stat not in STATISTICS:
            raise ValueError(f"unknown statistic {stat!r}")
        if var not in VARS:
            raise ValueError(f"unknown variable {var!r}")
        out.append((stat, VARS.index(var)))
    return out


def weighted_sum(fillings: Iterable[Filling], weights: Mapping[str, str]) -> GenPoly:
    """Sum of monomials prod var^{stat(f)} over the given fillings."""
    key = _weights_key(weights)
    counts: Counter = Counter()
    for f in fillings:
        exp = [0, 0, 0]
        for stat, k in key:
            exp[k] += STATISTICS[stat](f)
        counts[tuple(exp)] += 1
    return GenPoly.from_counter(counts)


def class_poly(sigma: Filling, weights: Mapping[str, str], budget: int = DEFAULT_BUDGET) -> GenPoly:
    """Generating polynomial of the row class of sigma, e.g. ``{"maj": "q", "inv": "t"}``."""
    return weighted_sum(enumerate_row_class(sigma, budget), weights)


# -- finite-alphabet modified Macdonald polynomials ------------------------


class ContentPoly:
    """Mapping from content vectors (multiplicities of 1..N) to GenPoly."""

    def __init__(self, nvars: int, terms: Mapping[tuple[int, ...], GenPoly]):
        self.nvars = nvars
        self.terms = {k: v for k, v in terms.items() if v}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ContentPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __getitem__(self, content: tuple[int, ...]) -> GenPoly:
        return self.terms.get(tuple(content), GenPoly())

    def permute(self, perm: Sequence[int]) -> ContentPoly:
        """Relabel variable ``k`` as ``perm[k]`` (0-based)."""
        out = {}
        for content, p in self.terms.items():
            new = [0] * self.nvars
            for k, m in enumerate(content):
                new[perm[k]] = m
            out[tuple(new)] = p
        return ContentPoly(self.nvars, out)

    def is_symmetric(self) -> bool:
        for i in range(self.nvars - 1):
            perm = list(range(self.nvars))
            perm[i], perm[i + 1] = perm[i + 1], perm[i]
            if self.permute(perm) != self:
                return False
        return True

    def __str__(self) -> str:
        lines = []
        for content in sorted(self.terms, reverse=True):
            lines.append(f"({','.join(map(str, content))}): {self.terms[content]}")
        return "\n".join(lines)


def all_fillings(shape: Sequence[int], max_entry: int) -> Iterator[Filling]:
    n = sum(shape)
    for vals in itertools.product(range(1, max_entry + 1), repeat=n):
        rows, pos = [], 0
        for p in shape:
            rows.append(vals[pos:pos + p])
            pos += p
        yield Filling(tuple(rows))


def macdonald_poly(shape: Sequence[int], nvars: int, stat: str = "inv", budget: int = DEFAULT_BUDGET) -> ContentPoly:
    """Sum of x^content q^maj t^stat over all fillings with entries in 1..nvars."""
    if stat not in ("inv", "quinv"):
        raise ValueError("stat must be 'inv' or 'quinv'")
    if nvars < 1:
        raise ValueError("need at least one variable")
    total = nvars ** sum(shape)
    if total > budget:
        raise BudgetExceeded(f"{total} fillings exceed budget {budget}")
    fn = STATISTICS[stat]
    maj = STATISTICS["maj"]
    buckets: dict[tuple[int, ...], Counter] = {}
    for f in all_fillings(shape, nvars):
        content = [0] * nvars
        for row in f.rows:
            for x in row:
                content[x - 1] += 1
        buckets.setdefault(tuple(content), Counter())[(maj(f), fn(f), 0)] += 1
    return ContentPoly(nvars, {k: GenPoly.from_counter(v) for k, v in buckets.items()})
