"""Exhaustive checkers: brute-force generating polynomials and bijective transport.

Every checker returns a :class:`VerificationReport`. Reports serialize
without timing so that runs with different worker counts compare byte for byte.
"""

from __future__ import annotations

import itertools
import json
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .bijections import gamma, kappa, theta, varphi
from .filling import (
    INF,
    Filling,
    is_rectangle,
    partitions,
    rectangle_decomposition,
    row_class_signature,
    serialize,
    split_reverse_join,
    transpose,
)
from .operators import (
    Kind,
    Side,
    block_side,
    compatible_columns,
    matching_kinds,
    phi,
    rho,
    row_swap,
)
from .poly import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    GenPoly,
    all_fillings,
    class_size,
    enumerate_row_class,
    invq_product,
    macdonald_poly,
    weighted_sum,
)
from .stats import Q, inv, maj, ndes_vector, quinv

VIOLATION_CAP = 10


@dataclass(frozen=True, order=True)
class Violation:
    filling: str
    expected: str
    actual: str

    def to_dict(self) -> dict:
        return {"filling": self.filling, "expected": self.expected, "actual": self.actual}


@dataclass
class VerificationReport:
    theorem: str
    params: dict
    instances: int = 0
    violations: list[Violation] = field(default_factory=list)
    violation_count: int = 0
    elapsed: float = 0.0
    # free-form per-check facts, e.g. flips outside a lemma's hypothesis
    notes: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.violation_count == 0

    def fail(self, filling: Filling | str, expected, actual) -> None:
        text = filling if isinstance(filling, str) else serialize(filling)
        self.violation_count += 1
        self.violations.append(Violation(text, str(expected), str(actual)))
        if len(self.violations) > 4 * VIOLATION_CAP:
            self._trim()

    def _trim(self) -> None:
        self.violations = sorted(set(self.violations))[:VIOLATION_CAP]

    def absorb(self, other: VerificationReport) -> None:
        self.instances += other.instances
        self.violation_count += other.violation_count
        self.violations.extend(other.violations)
        for k, v in other.notes.items():
            self.notes[k] = self.notes.get(k, 0) + v if isinstance(v, int) else v
        self._trim()

    def to_dict(self) -> dict:
        self._trim()
        return {
            "theorem": self.theorem,
            "params": self.params,
            "verdict": "pass" if self.passed else "fail",
            "instances": self.instances,
            "violation_count": self.violation_count,
            "violations": [v.to_dict() for v in self.violations],
            "notes": dict(sorted(self.notes.items())),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    def to_text(self) -> str:
        self._trim()
        params = " ".join(f"{k}={_fmt(v)}" for k, v in sorted(self.params.items()))
        lines = [
            f"theorem: {self.theorem}",
            f"params: {params}",
            f"instances: {self.instances}",
            f"verdict: {'PASS' if self.passed else 'FAIL'} ({self.violation_count} violations)",
        ]
        for k, v in sorted(self.notes.items()):
            lines.append(f"note {k}: {_fmt(v)}")
        for v in self.violations:
            lines.append("violation:")
            lines.extend("  | " + line for line in v.filling.splitlines())
            lines.append(f"  expected: {v.expected}")
            lines.append(f"  actual:   {v.actual}")
        return "\n".join(lines)


def inline(f: Filling) -> str:
    """Single-line form: rows top first, separated by ' / '."""
    return " / ".join(serialize(f).splitlines())


def _fmt(v) -> str:
    if isinstance(v, (list, tuple)):
        return "[" + ",".join(_fmt(x) for x in v) + "]"
    return str(v)


def _timed(fn: Callable[..., VerificationReport]) -> Callable[..., VerificationReport]:
    def wrapper(*args, **kwargs):
        start = time.perf_counter()
        report = fn(*args, **kwargs)
        report.elapsed = time.perf_counter() - start
        return report

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


def _run(fn: Callable, tasks: Sequence, workers: int) -> list:
    if workers <= 1 or len(tasks) <= 1:
        return [fn(t) for t in tasks]
    chunk = max(1, len(tasks) // (4 * workers))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, tasks, chunksize=chunk))


def merged(theorem: str, params: dict, parts: Iterable[VerificationReport]) -> VerificationReport:
    out = VerificationReport(theorem, params)
    for p in parts:
        out.absorb(p)
    return out


def _shape_params(shape: Sequence[int]) -> list[int]:
    return list(shape)


# -- row classes -----------------------------------------------------------


def class_table(sigma: Filling, budget: int = DEFAULT_BUDGET) -> list[tuple[Filling, int, int, int]]:
    """(member, maj, inv, quinv) for each member of the row class, in enumeration order."""
    return [(f, maj(f), inv(f), quinv(f)) for f in enumerate_row_class(sigma, budget)]


def _sorted(fillings: Iterable[Filling]) -> list[Filling]:
    return sorted(fillings, key=lambda f: f.rows)


@_timed
def check_T1(sigma: Filling, budget: int = DEFAULT_BUDGET) -> VerificationReport:
    """(maj, inv) and (maj, quinv) agree on the row class, by polynomials and by varphi."""
    members = list(enumerate_row_class(sigma, budget))
    rep = _sorted(members)[0] if members else sigma
    report = VerificationReport("T1", {"shape": list(sigma.shape), "class": inline(rep)}, len(members))

    lhs = weighted_sum(members, {"maj": "q", "inv": "t"})
    rhs = weighted_sum(members, {"maj": "q", "quinv": "t"})
    poly_ok = lhs == rhs
    if not poly_ok:
        report.fail(rep, lhs, rhs)

    transport_ok = True
    images = []
    for tau in members:
        image = varphi(tau)
        images.append(image)
        if row_class_signature(image) != row_class_signature(tau):
            transport_ok = False
            report.fail(tau, "varphi image in the same row class", serialize(image))
        elif (quinv(image), maj(image)) != (inv(tau), maj(tau)):
            transport_ok = False
            report.fail(tau, f"(quinv,maj)=({inv(tau)},{maj(tau)})", f"({quinv(image)},{maj(image)})")
    if _sorted(images) != _sorted(members):
        transport_ok = False
        report.fail(rep, "varphi permutes the class", "images repeat")
    if poly_ok != transport_ok:
        report.fail(rep, "polynomial and transport verdicts agree",
                    f"polynomial={'pass' if poly_ok else 'fail'} transport={'pass' if transport_ok else 'fail'}")
    return report


def _unmatched_triples(triples: Counter) -> list[tuple[int, int, int]]:
    return sorted(k for k, n in triples.items() if triples.get((k[0], k[2], k[1]), 0) != n)


@_timed
def check_T2(sigma: Filling, budget: int = DEFAULT_BUDGET) -> VerificationReport:
    """Symmetry of the (maj, inv, quinv) class polynomial under t <-> u."""
    members = list(enumerate_row_class(sigma, budget))
    rep = _sorted(members)[0] if members else sigma
    rect = is_rectangle(sigma.shape)
    params = {"shape": list(sigma.shape), "class": inline(rep), "claim": "theorem" if rect else "none"}
    report = VerificationReport("T2", params, len(members))

    triples = Counter((maj(f), inv(f), quinv(f)) for f in members)
    poly = GenPoly.from_counter(triples)
    if poly != poly.swap("t", "u"):
        report.fail(rep, poly, poly.swap("t", "u"))
        report.notes["unmatched (maj,inv,quinv)"] = [list(t) for t in _unmatched_triples(triples)]
    if rect:
        images = []
        for tau in members:
            image = theta(tau)
            images.append(image)
            if row_class_signature(image) != row_class_signature(tau):
                report.fail(tau, "theta image in the same row class", serialize(image))
            elif (inv(tau), quinv(tau), maj(tau)) != (quinv(image), inv(image), maj(image)):
                report.fail(tau, (inv(tau), quinv(tau), maj(tau)), (quinv(image), inv(image), maj(image)))
        if _sorted(images) != _sorted(members):
            report.fail(rep, "theta permutes the class", "images repeat")
    return report


@_timed
def check_invq(sigma: Filling, budget: int = DEFAULT_BUDGET) -> VerificationReport:
    """At q = 1 both class polynomials equal the product of row t-multinomials."""
    members = list(enumerate_row_class(sigma, budget))
    rep = _sorted(members)[0] if members else sigma
    report = VerificationReport("invq", {"shape": list(sigma.shape), "class": inline(rep)}, len(members))
    expected = invq_product(sigma)
    for stat in ("inv", "quinv"):
        got = weighted_sum(members, {"maj": "q", stat: "t"}).substitute(q=1)
        if got != expected:
            report.fail(rep, expected, f"{stat}: {got}")
    return report


@_timed
def check_transpose_maj(sigma: Filling, budget: int = DEFAULT_BUDGET) -> VerificationReport:
    """Sum of t^inv over the class equals the sum of t^maj of the transposes."""
    members = list(enumerate_row_class(sigma, budget))
    rep = _sorted(members)[0] if members else sigma
    report = VerificationReport("transpose-maj", {"shape": list(sigma.shape), "class": inline(rep)}, len(members))
    lhs = GenPoly.from_counter(Counter((0, inv(f), 0) for f in members))
    rhs = GenPoly.from_counter(Counter((0, maj(transpose(f)), 0) for f in members))
    if lhs != rhs:
        report.fail(rep, lhs, rhs)
    return report


CLASS_CHECKS = {
    "T1": check_T1,
    "T2": check_T2,
    "invq": check_invq,
    "transpose-maj": check_transpose_maj,
}


# -- exhaustive suites over all fillings of a shape -------------------------


def _suite_phi(report: VerificationReport, f: Filling) -> None:
    x = ndes_vector(f)
    for i in compatible_columns(f):
        report.instances += 1
        g = phi(f, i)
        dx = x[i] - x[i - 1]
        swapped = list(x)
        swapped[i - 1], swapped[i] = swapped[i], swapped[i - 1]
        checks = {
            "maj": (maj(f), maj(g)),
            "inv": (inv(f) + dx, inv(g)),
            "quinv": (quinv(f) + dx, quinv(g)),
            "ndes": (tuple(swapped), ndes_vector(g)),
            "row class": (row_class_signature(f), row_class_signature(g)),
            "involution": (f, phi(g, i)),
        }
        for name, (want, got) in checks.items():
            if want != got:
                report.fail(f, f"phi_{i} {name} {want}", got)


def _class_groups(shape: Sequence[int], max_entry: int) -> dict:
    groups: dict = {}
    for f in all_fillings(shape, max_entry):
        groups.setdefault(row_class_signature(f), []).append(f)
    return groups


def _suite_gamma(report: VerificationReport, members: list[Filling]) -> None:
    images = []
    for f in members:
        report.instances += 1
        g = gamma(f)
        images.append(g)
        if row_class_signature(g) != row_class_signature(f):
            report.fail(f, "gamma image row-equivalent", serialize(g))
            continue
        if maj(g) != maj(f):
            report.fail(f, f"maj {maj(f)}", maj(g))
        if quinv(g) - kappa(g) != inv(f):
            report.fail(f, f"quinv-kappa {inv(f)}", quinv(g) - kappa(g))
        if f.rows and g.rows[-1] != f.rows[-1][::-1]:
            report.fail(f, "top rows reversed", g.rows[-1])
        if f.rows:
            first = rectangle_decomposition(f.shape)[0]
            want = ndes_vector(f.sub_block(first))
            got = ndes_vector(split_reverse_join(g.sub_block(first)))
            if want != got:
                report.fail(f, f"Ndes of leftmost rectangle {want}", got)
    if _sorted(images) != _sorted(members):
        report.fail(members[0], "gamma permutes the class", "images repeat")


def _suite_theta(report: VerificationReport, members: list[Filling]) -> None:
    images = []
    for f in members:
        report.instances += 1
        g = theta(f)
        images.append(g)
        want = (inv(f), quinv(f), maj(f))
        got = (quinv(g), inv(g), maj(g))
        if want != got:
            report.fail(f, f"(quinv,inv,maj) {want}", got)
        if ndes_vector(g) != ndes_vector(f):
            report.fail(f, f"ndes {ndes_vector(f)}", ndes_vector(g))
    if _sorted(images) != _sorted(members):
        report.fail(members[0], "theta permutes the class", "images repeat")


def _suite_task(task: tuple) -> VerificationReport:
    kind, shape, max_entry = task
    report = VerificationReport(kind, {})
    if kind == "phi":
        for f in all_fillings(shape, max_entry):
            _suite_phi(report, f)
    elif kind == "gamma":
        for members in _class_groups(shape, max_entry).values():
            _suite_gamma(report, members)
    elif kind == "theta":
        for members in _class_groups(shape, max_entry).values():
            _suite_theta(report, members)
    else:
        raise ValueError(kind)
    return report


def _check_budget(shapes: Sequence[Sequence[int]], max_entry: int, budget: int) -> None:
    total = sum(max_entry ** sum(s) for s in shapes)
    if total > budget:
        raise BudgetExceeded(f"{total} fillings exceed budget {budget}")


@_timed
def check_suite(kind: str, shapes: Sequence[Sequence[int]], max_entry: int,
                workers: int = 1, budget: int = DEFAULT_BUDGET) -> VerificationReport:
    """Run the phi, gamma or theta suite over every filling of each shape."""
    shapes = [tuple(s) for s in shapes]
    if kind == "theta" and not all(is_rectangle(s) for s in shapes):
        raise ValueError("theta suite needs rectangular shapes")
    _check_budget(shapes, max_entry, budget)
    parts = _run(_suite_task, [(kind, s, max_entry) for s in shapes], workers)
    params = {"shapes": [list(s) for s in shapes], "max_entry": max_entry}
    return merged(kind, params, parts)


def check_phi_involution_suite(shape, max_entry, **kw) -> VerificationReport:
    return check_suite("phi", [shape], max_entry, **kw)


def check_gamma_suite(shape, max_entry, **kw) -> VerificationReport:
    return check_suite("gamma", [shape], max_entry, **kw)


def check_theta_suite(shape, max_entry, **kw) -> VerificationReport:
    return check_suite("theta", [shape], max_entry, **kw)


# -- lemma suites ----------------------------------------------------------


def small_rectangles(max_cols: int = 3, max_rows: int = 3) -> list[tuple[int, ...]]:
    return [(n,) * m for m in range(1, max_rows + 1) for n in range(1, max_cols + 1)]


def small_shapes(max_size: int) -> list[tuple[int, ...]]:
    return [lam for n in range(max_size + 1) for lam in partitions(n)]


def _lemma_5_1(report: VerificationReport, f: Filling) -> None:
    report.instances += 1
    n = f.ncols
    x = ndes_vector(f)
    rhs = sum(x[i - 1] * (n - 2 * i + 1) for i in range(1, n + 1))
    r = split_reverse_join(f)
    if quinv(f) - inv(r) != rhs:
        report.fail(f, f"quinv-inv(rev) {rhs}", quinv(f) - inv(r))
    if inv(f) - quinv(r) != rhs:
        report.fail(f, f"inv-quinv(rev) {rhs}", inv(f) - quinv(r))


def _tally(report: VerificationReport, key: str) -> None:
    report.notes[key] = report.notes.get(key, 0) + 1


def _lemma_5_2(report: VerificationReport, f: Filling) -> None:
    for i in compatible_columns(f):
        flip = rho(f, i)
        if flip.identity:
            continue
        report.instances += 1
        a, b = f.rows[-1][i - 1], f.rows[-1][i]
        # with equal top entries the flip starts below the top row
        where = "equal top entries" if a == b else "unequal top entries"
        _tally(report, f"flips with {where}")
        g = flip.filling
        before = report.violation_count
        if maj(g) != maj(f):
            report.fail(f, f"rho_{i} maj {maj(f)}", maj(g))
        want = quinv(f) + (a > b) - (a < b)
        if quinv(g) != want:
            report.fail(f, f"rho_{i} quinv {want}", quinv(g))
        if report.violation_count > before:
            _tally(report, f"failing flips with {where}")


def _lemma_5_3(report: VerificationReport, f: Filling) -> None:
    h = f.nrows
    for i in compatible_columns(f):
        for r in range(1, h + 1):
            flip = rho(f, i, r)
            if flip.identity:
                continue
            report.instances += 1
            g, k, e = flip.filling, flip.start_row, flip.end_row
            c, d = f.at(k, i), f.at(k, i + 1)
            qa, qb = Q(f.at(k + 1, i), c, d), Q(f.at(k + 1, i + 1), c, d)
            s, t = f.at(e, i), f.at(e, i + 1)
            u, v = f.at(e - 1, i), f.at(e - 1, i + 1)
            q1, q2 = Q(s, u, t), Q(s, v, t)
            where = "balanced starting row" if qa == qb else "unbalanced starting row"
            _tally(report, f"flips with {where}")
            tag = f"rho_{i}^{r}"
            before = report.violation_count
            if qa == qb:
                want = quinv(f) + (1 if qa == 0 else -1)
                if quinv(g) != want:
                    report.fail(f, f"{tag} quinv {want}", quinv(g))
            if q1 == q2:
                want = inv(f) + (1 if q1 == 0 else -1)
                if inv(g) != want:
                    report.fail(f, f"{tag} inv {want}", inv(g))
            if (qa == qb or q1 == q2) and maj(g) != maj(f):
                report.fail(f, f"{tag} maj {maj(f)}", maj(g))
            if report.violation_count > before:
                _tally(report, f"failing flips with {where}")


def _lemma_6_3(report: VerificationReport, f: Filling) -> None:
    m, n = f.nrows, f.ncols
    for i in compatible_columns(f):
        a, b = f.at(m, i), f.at(m, i + 1)
        c, d = f.at(m - 1, i), f.at(m - 1, i + 1)
        if a < d < b <= c:
            dq, dm = n - i - 1, -1
        elif a < c < b <= d:
            dq, dm = -(n - i + 1), 1
        else:
            continue
        report.instances += 1
        g = row_swap(f, i, m)
        if (quinv(g) - quinv(f), maj(g) - maj(f)) != (dq, dm):
            report.fail(f, f"t_{i} (dquinv,dmaj)=({dq},{dm})", (quinv(g) - quinv(f), maj(g) - maj(f)))


_FILLING_LEMMAS = {"L5.1": _lemma_5_1, "L5.2": _lemma_5_2, "L5.3": _lemma_5_3, "L6.3": _lemma_6_3}


def _lemma_task(task: tuple) -> VerificationReport:
    name, shape, max_entry = task
    report = VerificationReport(name, {})
    check = _FILLING_LEMMAS[name]
    for f in all_fillings(shape, max_entry):
        check(report, f)
    return report


# Printed rows of the two tables: condition on (a, b, c, d, z) -> expected pairs.
TABLE_1 = [
    (lambda a, b, c, d, z: z > d >= a > b > c, (0, 1), (1, 0)),
    (lambda a, b, c, d, z: z > d >= b >= a > c, (0, 1), (1, 0)),
    (lambda a, b, c, d, z: d >= z >= a > b > c, (0, 0), (0, 0)),
    (lambda a, b, c, d, z: d >= z >= b >= a > c, (0, 0), (0, 0)),
    (lambda a, b, c, d, z: d >= a > z >= b > c, (1, 0), (1, 0)),
    (lambda a, b, c, d, z: d >= b > z >= a > c, (0, 1), (0, 1)),
    (lambda a, b, c, d, z: d >= a > b > z > c, (1, 1), (1, 1)),
    (lambda a, b, c, d, z: d >= b >= a > z > c, (1, 1), (1, 1)),
    (lambda a, b, c, d, z: d >= a > b > c >= z, (0, 1), (1, 0)),
    (lambda a, b, c, d, z: d >= b >= a > c >= z, (0, 1), (1, 0)),
]
TABLE_2 = [
    (lambda a, b, c, d, z: c >= b > d > a > z, (1, 0), (1, 1)),
    (lambda a, b, c, d, z: c >= b > d >= z >= a, (0, 0), (1, 0)),
    (lambda a, b, c, d, z: c >= b > z > d > a, (0, 1), (1, 1)),
    (lambda a, b, c, d, z: c >= z >= b > d > a, (0, 0), (0, 1)),
    (lambda a, b, c, d, z: z > c >= b > d > a, (1, 0), (1, 1)),
]


def _tables(report: VerificationReport, max_value: int) -> None:
    vals = range(1, max_value + 1)
    for a, b, c, d, z in itertools.product(vals, repeat=5):
        left = (Q(a, c, z), Q(b, d, z))
        t1_right = (Q(a, d, z), Q(b, c, z))
        t2_right = (Q(b, c, z), Q(a, d, z))
        for n, (cond, want_l, want_r) in enumerate(TABLE_1, start=1):
            if cond(a, b, c, d, z):
                report.instances += 1
                if (left, t1_right) != (want_l, want_r):
                    report.fail(f"{(a, b, c, d, z)}", f"table 1 row {n} {want_l}{want_r}", f"{left}{t1_right}")
        for n, (cond, want_l, want_r) in enumerate(TABLE_2, start=1):
            if cond(a, b, c, d, z):
                report.instances += 1
                if (left, t2_right) != (want_l, want_r):
                    report.fail(f"{(a, b, c, d, z)}", f"table 2 row {n} {want_l}{want_r}", f"{left}{t2_right}")
        if d >= a > b > c or d >= b >= a > c:
            report.instances += 1
            if sum(left) != sum(t1_right):
                report.fail(f"{(a, b, c, d, z)}", "table 1 sums equal", (left, t1_right))
        if c >= b > d > a:
            report.instances += 1
            if sum(left) + 1 != sum(t1_right):
                report.fail(f"{(a, b, c, d, z)}", "table 2 sums differ by one", (left, t1_right))
    # square observation on 2x2 fillings a b / c d
    for a, b, c, d in itertools.product(range(1, 6), repeat=4):
        report.instances += 1
        if (Q(a, c, b) == Q(a, d, b)) != (Q(a, c, d) == Q(b, c, d)):
            report.fail(f"{(a, b, c, d)}", "square observation", "mismatch")


def _block_partition(report: VerificationReport, max_value: int) -> None:
    for a, b, c, d in itertools.product(range(1, max_value + 1), repeat=4):
        side = block_side(a, b, c, d)
        kinds = matching_kinds(a, b, c, d)
        if side is Side.NEUTRAL:
            continue
        report.instances += 1
        if len(kinds) != 1:
            report.fail(f"{(a, b, c, d)}", "exactly one kind", kinds)
            continue
        balanced = Q(a, c, d) == Q(b, c, d)
        if balanced != (kinds[0] in (Kind.A, Kind.B)):
            report.fail(f"{(a, b, c, d)}", f"kind {kinds[0].value} with Q-balance {balanced}", "mismatch")


@_timed
def check_lemma_suites(selector: str, shapes: Sequence[Sequence[int]] | None = None,
                       max_entry: int = 3, max_value: int | None = None,
                       workers: int = 1, budget: int = DEFAULT_BUDGET) -> VerificationReport:
    """Exhaustive check of one lemma family.

    Filling lemmas (L5.1, L5.2, L5.3, L6.3) default to rectangles up to 3x3;
    ``tables`` and ``block-partition`` range over small value sets.
    """
    if selector in _FILLING_LEMMAS:
        shapes = [tuple(s) for s in (shapes or small_rectangles())]
        if selector in ("L5.1", "L6.3") and not all(is_rectangle(s) for s in shapes):
            raise ValueError(f"{selector} is stated for rectangles")
        _check_budget(shapes, max_entry, budget)
        parts = _run(_lemma_task, [(selector, s, max_entry) for s in shapes], workers)
        params = {"shapes": [list(s) for s in shapes], "max_entry": max_entry}
        return merged(selector, params, parts)
    report = VerificationReport(selector, {})
    if selector == "tables":
        report.params = {"max_value": max_value or 6}
        _tables(report, max_value or 6)
    elif selector == "block-partition":
        report.params = {"max_value": max_value or 4}
        _block_partition(report, max_value or 4)
    else:
        raise ValueError(f"unknown lemma suite {selector!r}")
    return report


LEMMA_SUITES = ("L5.1", "L5.2", "L5.3", "L6.3", "tables", "block-partition")


# -- Macdonald -------------------------------------------------------------


@_timed
def check_macdonald(shape: Sequence[int], nvars: int, budget: int = DEFAULT_BUDGET) -> VerificationReport:
    """The inv and quinv formulas agree and are symmetric in the variables."""
    shape = tuple(shape)
    report = VerificationReport("macdonald", {"shape": list(shape), "vars": nvars}, nvars ** sum(shape))
    by_inv = macdonald_poly(shape, nvars, "inv", budget)
    by_quinv = macdonald_poly(shape, nvars, "quinv", budget)
    label = f"shape {shape} N={nvars}"
    for content in sorted(set(by_inv.terms) | set(by_quinv.terms)):
        if by_inv[content] != by_quinv[content]:
            report.fail(f"{label} content {content}", by_inv[content], by_quinv[content])
    for name, p in (("inv", by_inv), ("quinv", by_quinv)):
        if not p.is_symmetric():
            report.fail(label, f"{name} formula symmetric", "not symmetric")
    return report


def _macdonald_task(task: tuple) -> VerificationReport:
    shape, nvars, budget = task
    return check_macdonald(shape, nvars, budget)


@_timed
def check_macdonald_shapes(shapes: Sequence[Sequence[int]], nvars: int, workers: int = 1,
                           budget: int = DEFAULT_BUDGET) -> VerificationReport:
    """check_macdonald over several shapes, one task per shape."""
    shapes = [tuple(s) for s in shapes]
    parts = _run(_macdonald_task, [(s, nvars, budget) for s in shapes], workers)
    return merged("macdonald", {"shapes": [list(s) for s in shapes], "vars": nvars}, parts)


# -- sweeps over (shape, content) classes ----------------------------------


def class_representatives(shape: Sequence[int], max_entry: int) -> Iterable[Filling]:
    """One filling per row class: every row sorted ascending."""
    per_row = [list(itertools.combinations_with_replacement(range(1, max_entry + 1), p)) for p in shape]
    for rows in itertools.product(*per_row):
        yield Filling(rows)


def _sweep_task(task: tuple) -> VerificationReport:
    theorems, shape, max_entry, budget = task
    out = VerificationReport("sweep", {})
    for rep in class_representatives(shape, max_entry):
        for name in theorems:
            part = CLASS_CHECKS[name](rep, budget)
            out.notes[f"classes {name}"] = out.notes.get(f"classes {name}", 0) + 1
            out.absorb(part)
    return out


@_timed
def sweep(max_size: int, max_entry: int, theorems: Sequence[str], workers: int = 1,
          budget: int = DEFAULT_BUDGET, rectangles_only: bool = False,
          shapes: Sequence[Sequence[int]] | None = None) -> VerificationReport:
    """Run class checks on every partition of size <= max_size and every row content."""
    theorems = list(theorems)
    for name in theorems:
        if name not in CLASS_CHECKS:
            raise ValueError(f"unknown class theorem {name!r}")
    if shapes is None:
        shapes = [s for s in small_shapes(max_size) if s and (is_rectangle(s) or not rectangles_only)]
    shapes = [tuple(s) for s in shapes]
    for s in shapes:
        for rep in class_representatives(s, max_entry):
            if class_size(rep) > budget:
                raise BudgetExceeded(f"class of shape {s} has {class_size(rep)} members, budget is {budget}")
    parts = _run(_sweep_task, [(tuple(theorems), s, max_entry, budget) for s in shapes], workers)
    params = {
        "theorems": theorems,
        "shapes": [list(s) for s in shapes],
        "max_entry": max_entry,
    }
    return merged("+".join(theorems), params, parts)


__all__ = [
    "INF",
    "VerificationReport",
    "Violation",
    "check_T1",
    "check_T2",
    "check_invq",
    "check_transpose_maj",
    "check_suite",
    "check_phi_involution_suite",
    "check_gamma_suite",
    "check_theta_suite",
    "check_lemma_suites",
    "check_macdonald",
    "check_macdonald_shapes",
    "class_table",
    "class_representatives",
    "enumerate_row_class",
    "inline",
    "LEMMA_SUITES",
    "small_rectangles",
    "small_shapes",
    "merged",
    "sweep",
]
