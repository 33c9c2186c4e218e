"""Brute-force oracles for every structural claim.

Checkers operate on raw matrices — either integer levels or group elements —
and count exhaustively with exact integer histograms.  They never call
construction code; collapsing projections are handed in as plain mappings.
Column subsets are scanned in lexicographic order and the first failure is
reported with a concrete counterexample.
"""

from __future__ import annotations

import operator
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations, permutations, product
from typing import Callable, Mapping, Optional, Sequence

from .errors import SpecError


@dataclass
class VerificationReport:
    check: str
    passed: bool
    detail: str = ""
    counterexample: Optional[dict] = field(default=None)

    def __bool__(self) -> bool:
        return self.passed

    def message(self) -> str:
        status = "pass" if self.passed else "FAIL"
        out = f"{self.check}: {status}"
        if self.detail:
            out += f" ({self.detail})"
        if self.counterexample:
            out += f" counterexample={self.counterexample}"
        return out

    def to_dict(self) -> dict:
        out = {"check": self.check, "passed": self.passed}
        if self.detail:
            out["detail"] = self.detail
        if self.counterexample is not None:
            out["counterexample"] = _plain(self.counterexample)
        return out


def _plain(obj):
    # make counterexamples JSON-friendly (group elements -> their text form)
    if isinstance(obj, dict):
        return {k: _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if hasattr(obj, "text"):
        return obj.text()
    return obj


def _level_key(v):
    return v.code if hasattr(v, "code") else v


def check_oa_strength(rows: Sequence[Sequence], s: int, t: int, name: str = "oa-strength") -> VerificationReport:
    """Every t columns must carry each of the s**t level tuples n/s**t times."""
    rows = [tuple(r) for r in rows]
    n = len(rows)
    if n == 0:
        raise SpecError("empty matrix")
    m = len(rows[0])
    if t > m:
        raise SpecError(f"strength {t} exceeds column count {m}")
    if n % s**t:
        return VerificationReport(
            name, False, f"run size {n} not divisible by {s}^{t}",
            {"n": n, "s": s, "t": t},
        )
    levels = sorted({v for r in rows for v in r}, key=_level_key)
    if len(levels) != s:
        return VerificationReport(
            name, False, f"found {len(levels)} distinct levels, expected {s}",
            {"levels": levels},
        )
    expected = n // s**t
    columns = list(zip(*rows))
    for cols in combinations(range(m), t):
        counts = Counter(zip(*(columns[c] for c in cols)))
        for combo in product(levels, repeat=t):
            got = counts.get(combo, 0)
            if got != expected:
                return VerificationReport(
                    name, False, "unbalanced level tuple",
                    {
                        "columns": list(cols),
                        "levels": list(combo),
                        "observed": got,
                        "expected": expected,
                    },
                )
    return VerificationReport(name, True, f"OA({n}, {m}, {s}, {t})")


def check_difference_matrix(
    rows: Sequence[Sequence],
    elements: Sequence,
    subtract: Callable = operator.sub,
    name: str = "difference-matrix",
) -> VerificationReport:
    """Entry-wise differences of every ordered column pair must cover the
    group evenly (r/s occurrences of each element)."""
    rows = [tuple(r) for r in rows]
    r = len(rows)
    if r == 0:
        raise SpecError("empty matrix")
    c = len(rows[0])
    s = len(elements)
    if r % s:
        return VerificationReport(
            name, False, f"row count {r} not divisible by group order {s}",
            {"rows": r, "group order": s},
        )
    expected = r // s
    ordered = sorted(elements, key=_level_key)
    columns = list(zip(*rows))
    for c1, c2 in permutations(range(c), 2):
        counts = Counter(map(subtract, columns[c1], columns[c2]))
        for el in ordered:
            got = counts.get(el, 0)
            if got != expected:
                return VerificationReport(
                    name, False, "uneven difference coverage",
                    {
                        "columns": [c1, c2],
                        "element": el,
                        "observed": got,
                        "expected": expected,
                    },
                )
    return VerificationReport(name, True, f"D({r}, {c}, {s})")


def check_latin_hypercube(rows: Sequence[Sequence[int]], name: str = "latin-hypercube") -> VerificationReport:
    rows = [tuple(r) for r in rows]
    n = len(rows)
    if n == 0:
        raise SpecError("empty matrix")
    m = len(rows[0])
    want = list(range(n))
    for j in range(m):
        col = sorted(r[j] for r in rows)
        if col != want:
            missing = sorted(set(want) - set(col))
            return VerificationReport(
                name, False, f"column {j} is not a permutation of 0..{n - 1}",
                {"column": j, "missing": missing[:5]},
            )
    return VerificationReport(name, True, f"{n}x{m} Latin hypercube")


def check_stratification(
    rows: Sequence[Sequence[int]],
    scale: int,
    g: int,
    dims: Optional[tuple[int, int]] = None,
    name: str = "stratification",
) -> VerificationReport:
    """Each cell of the g x g grid (cell index floor(value*g/scale)) must hold
    the same number of points, for the given dimension pair or all pairs."""
    rows = [tuple(r) for r in rows]
    n = len(rows)
    if n == 0:
        raise SpecError("empty matrix")
    m = len(rows[0])
    if n % (g * g):
        return VerificationReport(
            name, False, f"run size {n} not divisible by {g}^2", {"n": n, "g": g}
        )
    expected = n // (g * g)
    pairs = [tuple(dims)] if dims is not None else list(combinations(range(m), 2))
    columns = [[v * g // scale for v in col] for col in zip(*rows)]
    for d1, d2 in pairs:
        counts = Counter(zip(columns[d1], columns[d2]))
        for cell in product(range(g), repeat=2):
            got = counts.get(cell, 0)
            if got != expected:
                return VerificationReport(
                    name, False, "uneven grid cell",
                    {
                        "dims": [d1, d2],
                        "cell": list(cell),
                        "observed": got,
                        "expected": expected,
                    },
                )
    return VerificationReport(name, True, f"{g}x{g} grid, {expected}/cell")


def _project_rows(rows, mapping: Mapping):
    return [tuple(mapping[v] for v in r) for r in rows]


def check_projection_compatibility(
    projections: Sequence[Mapping], name: str = "projection-compatibility"
) -> VerificationReport:
    """Coarser projections must refine finer ones: if two values collapse
    together at layer i they must also collapse together at every j <= i."""
    for i in range(len(projections)):
        domain = list(projections[i])
        for j in range(i):
            for a in domain:
                for b in domain:
                    if projections[i][a] == projections[i][b] and projections[j][a] != projections[j][b]:
                        return VerificationReport(
                            name, False, "refinement violated",
                            {"layers": [j + 1, i + 1], "pair": [a, b]},
                        )
    return VerificationReport(name, True)


def check_nested(
    layers: Sequence[Sequence[Sequence]],
    projections: Sequence[Mapping],
    s_levels: Sequence[int],
    t: int,
    name: str = "nested-oa",
) -> VerificationReport:
    """Row-prefix containment plus the strength condition on every collapse
    of every layer, plus compatibility of the projection family."""
    mats = [[tuple(r) for r in layer] for layer in layers]
    if len(mats) != len(projections) or len(mats) != len(s_levels):
        raise SpecError("layers, projections and level counts must align")
    for i in range(len(mats) - 1):
        n_i = len(mats[i])
        if len(mats[i + 1]) <= n_i:
            return VerificationReport(
                name, False, f"layer {i + 2} not larger than layer {i + 1}"
            )
        if mats[i + 1][:n_i] != mats[i]:
            first_bad = next(
                k for k in range(n_i) if mats[i + 1][k] != mats[i][k]
            )
            return VerificationReport(
                name, False, f"layer {i + 1} is not a row prefix of layer {i + 2}",
                {"row": first_bad},
            )
    compat = check_projection_compatibility(projections)
    if not compat:
        return VerificationReport(name, False, compat.detail, compat.counterexample)
    for i, mat in enumerate(mats):
        for j in range(i + 1):
            rep = check_oa_strength(
                _project_rows(mat, projections[j]), s_levels[j], t,
                name=f"{name}[layer {i + 1} via rho_{j + 1}]",
            )
            if not rep:
                return rep
    return VerificationReport(name, True, f"{len(mats)} layers, strength {t}")


def check_nested_dm(
    layers: Sequence[Sequence[Sequence]],
    projections: Sequence[Mapping],
    element_sets: Sequence[Sequence],
    subtract: Callable = operator.sub,
    name: str = "nested-dm",
) -> VerificationReport:
    """Difference-matrix analogue of check_nested."""
    mats = [[tuple(r) for r in layer] for layer in layers]
    for i in range(len(mats) - 1):
        n_i = len(mats[i])
        if mats[i + 1][:n_i] != mats[i]:
            return VerificationReport(
                name, False, f"layer {i + 1} is not a row prefix of layer {i + 2}"
            )
    compat = check_projection_compatibility(projections)
    if not compat:
        return VerificationReport(name, False, compat.detail, compat.counterexample)
    for i, mat in enumerate(mats):
        for j in range(i + 1):
            rep = check_difference_matrix(
                _project_rows(mat, projections[j]), element_sets[j], subtract,
                name=f"{name}[layer {i + 1} via rho_{j + 1}]",
            )
            if not rep:
                return rep
    return VerificationReport(name, True, f"{len(mats)} layers")


def check_sliced(
    rows: Sequence[Sequence],
    slice_size: int,
    projection: Mapping,
    s_low: int,
    t: int,
    name: str = "sliced-oa",
) -> VerificationReport:
    """Each consecutive row block must collapse into a strength-t array."""
    rows = [tuple(r) for r in rows]
    n = len(rows)
    if n % slice_size:
        return VerificationReport(
            name, False, f"run size {n} not divisible by slice size {slice_size}"
        )
    for l in range(n // slice_size):
        block = rows[l * slice_size : (l + 1) * slice_size]
        rep = check_oa_strength(
            _project_rows(block, projection), s_low, t, name=f"{name}[slice {l + 1}]"
        )
        if not rep:
            return rep
    return VerificationReport(
        name, True, f"{n // slice_size} slices of {slice_size} rows"
    )
