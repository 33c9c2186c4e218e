"""Nested and sliced permutations and the Latin-hypercube lifts built with
them.

A nested permutation of 0..s_I-1 places exactly one of its first s_i entries
in each of the s_i equal value blocks, for every layer size s_i.  A sliced
permutation sends each block of q = s_I/s_j consecutive positions onto one
value block of the same width, for every j below the top.  Relabeling an
array's levels through such permutations and then expanding each level into
a block of distinct values produces designs whose prefixes (nested case) or
row slices (sliced case) stratify progressively coarser grids.

All randomness is drawn from per-purpose streams seeded with strings such as
"<seed>:lh:<column>", so results are reproducible across runs and adding
columns never perturbs earlier columns' draws.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .arrays import NoaFamily
from .errors import SpecError
from .groups import GroupElement


def _validate_layer_sizes(layer_sizes: Sequence[int]) -> tuple[int, ...]:
    sizes = tuple(int(s) for s in layer_sizes)
    if not sizes or any(b <= a for a, b in zip(sizes, sizes[1:])):
        raise SpecError(f"layer sizes must be strictly increasing, got {list(sizes)}")
    if any(sizes[-1] % s for s in sizes):
        raise SpecError(f"every layer size must divide the top size, got {list(sizes)}")
    return sizes


def is_nested_permutation(values: Sequence[int], layer_sizes: Sequence[int]) -> bool:
    sizes = _validate_layer_sizes(layer_sizes)
    top = sizes[-1]
    if sorted(values) != list(range(top)):
        return False
    for s_i in sizes:
        q = top // s_i
        blocks = [v // q for v in values[:s_i]]
        if len(set(blocks)) != s_i:
            return False
    return True


def is_sliced_permutation(values: Sequence[int], layer_sizes: Sequence[int]) -> bool:
    sizes = _validate_layer_sizes(layer_sizes)
    top = sizes[-1]
    if sorted(values) != list(range(top)):
        return False
    for s_j in sizes[:-1]:
        q = top // s_j
        for g in range(s_j):
            block = values[g * q : (g + 1) * q]
            if len({v // q for v in block}) != 1:
                return False
    return True


@dataclass(frozen=True)
class NestedPermutation:
    values: tuple[int, ...]
    layer_sizes: tuple[int, ...]

    def __post_init__(self):
        if not is_nested_permutation(self.values, self.layer_sizes):
            raise SpecError(
                f"{list(self.values)} is not a nested permutation for layers "
                f"{list(self.layer_sizes)}"
            )


@dataclass(frozen=True)
class SlicedPermutation:
    values: tuple[int, ...]
    layer_sizes: tuple[int, ...]

    def __post_init__(self):
        if not is_sliced_permutation(self.values, self.layer_sizes):
            raise SpecError(
                f"{list(self.values)} is not a sliced permutation for layers "
                f"{list(self.layer_sizes)}"
            )


def _stream(seed, *tags) -> random.Random:
    return random.Random(":".join(str(t) for t in (seed, *tags)))


def gen_nested_permutation(layer_sizes: Sequence[int], seed, tag="np") -> NestedPermutation:
    """Greedy draw: position t samples uniformly among the values whose block
    (at the coarsest layer still covering position t) is untouched.

    Blocks of finer layers refine coarser ones, so a fresh coarse block
    implies fresh finer blocks and the greedy choice never dead-ends.
    """
    sizes = _validate_layer_sizes(layer_sizes)
    top = sizes[-1]
    rng = _stream(seed, tag)
    values: list[int] = []
    for t in range(1, top + 1):
        i0 = next(s for s in sizes if s >= t)
        q = top // i0
        used = {v // q for v in values}
        candidates = [v for v in range(top) if v // q not in used]
        values.append(rng.choice(candidates))
    return NestedPermutation(tuple(values), sizes)


def gen_sliced_permutation(layer_sizes: Sequence[int], seed, tag="sp") -> SlicedPermutation:
    """Independent uniform shuffles at every level of the block tree: coarse
    blocks are permuted among coarse positions, then recursively within."""
    sizes = _validate_layer_sizes(layer_sizes)
    top = sizes[-1]
    rng = _stream(seed, tag)
    out = [0] * top

    def fill(level: int, pos_start: int, val_start: int, width: int) -> None:
        if width == 1:
            out[pos_start] = val_start
            return
        prev = sizes[level - 1] if level > 0 else 1
        branching = sizes[level] // prev
        sub = width // branching
        order = list(range(branching))
        rng.shuffle(order)
        for idx, target in enumerate(order):
            fill(level + 1, pos_start + idx * sub, val_start + target * sub, sub)

    fill(0, 0, 0, top)
    return SlicedPermutation(tuple(out), sizes)


def oa_based_lh(rows: Sequence[Sequence[int]], s: int, seed, tag="lh") -> list[list[int]]:
    """Expand each level r of each column into the value block
    [r*q, (r+1)*q) via a per-column uniform shuffle, q = n/s.

    Every column must carry each level exactly q times; the result has each
    column a permutation of 0..n-1 and floor(out*s/n) == rows entry-wise.
    """
    rows = [list(r) for r in rows]
    n = len(rows)
    if n == 0 or n % s:
        raise SpecError(f"run size {n} is not a multiple of the level count {s}")
    q = n // s
    m = len(rows[0])
    out = [[0] * m for _ in range(n)]
    for col in range(m):
        positions: dict[int, list[int]] = {r: [] for r in range(s)}
        for idx in range(n):
            v = rows[idx][col]
            if v not in positions:
                raise SpecError(f"column {col} holds level {v} outside 0..{s - 1}")
            positions[v].append(idx)
        bad = next((r for r, p in positions.items() if len(p) != q), None)
        if bad is not None:
            raise SpecError(
                f"column {col} is unbalanced: level {bad} occurs "
                f"{len(positions[bad])} times, expected {q}"
            )
        rng = _stream(seed, tag, col)
        for r in range(s):
            block = list(range(r * q, (r + 1) * q))
            rng.shuffle(block)
            for idx, value in zip(positions[r], block):
                out[idx][col] = value
    return out


def _relabel(matrix, ordering: Sequence[GroupElement], relabels: Sequence[Sequence[int]]):
    position = {el: r for r, el in enumerate(ordering)}
    return [
        [relabels[col][position[e]] for col, e in enumerate(row)]
        for row in matrix.rows
    ]


@dataclass
class LiftedDesign:
    """A relabeled integer design and (unless relabel-only) its lifted
    Latin hypercube, with the slicing/nesting shape claims it must satisfy."""

    design: list[list[int]]            # relabeled levels, 0..scale-1
    scale: int                         # level count of `design`
    lifted: Optional[list[list[int]]]  # Latin hypercube on 0..n-1, or None
    kind: str                          # "nested" | "sliced" | "grouped"
    grids: list[dict] = field(default_factory=list)
    seed: object = None
    permutations: list[list[int]] = field(default_factory=list)

    @property
    def n(self) -> int:
        return len(self.design)

    @property
    def m(self) -> int:
        return len(self.design[0])


def _check_perms(perms, m, sizes, cls):
    if len(perms) != m:
        raise SpecError(f"need one permutation per column ({m}), got {len(perms)}")
    for p in perms:
        if not isinstance(p, cls):
            raise SpecError(f"expected {cls.__name__}, got {type(p).__name__}")
        if tuple(p.layer_sizes) != tuple(sizes):
            raise SpecError(
                f"permutation layers {list(p.layer_sizes)} do not match the chain "
                f"sizes {list(sizes)}"
            )


def build_nsfd(
    family: NoaFamily,
    permutations: Sequence[NestedPermutation],
    seed=0,
    stage: str = "full",
) -> LiftedDesign:
    """Relabel the top array through nested permutations keyed by the
    outer-first enumeration, then lift to a Latin hypercube whose row
    prefixes stratify progressively finer grids."""
    chain = family.chain
    nested = family.nested
    _check_perms(permutations, nested.top.n_cols, chain.sizes, NestedPermutation)
    ordering = chain.enumerate_ordered("outer-first")
    design = _relabel(nested.top, ordering, [p.values for p in permutations])
    grids = [
        {"rows": nested.prefix_sizes[i - 1], "grid": chain.sizes[i - 1]}
        for i in range(1, chain.layers + 1)
    ]
    lifted = None
    if stage == "full":
        lifted = oa_based_lh(design, chain.top_size, seed)
    elif stage != "relabel-only":
        raise SpecError(f"unknown stage {stage!r}")
    return LiftedDesign(
        design, chain.top_size, lifted, "nested", grids, seed,
        [list(p.values) for p in permutations],
    )


def build_ssfd_multi(
    family: NoaFamily,
    permutations: Sequence[SlicedPermutation],
    seed=0,
    stage: str = "full",
) -> LiftedDesign:
    """Relabel through sliced permutations keyed by the inner-first
    enumeration; the result slices evenly at every layer below the top."""
    chain = family.chain
    nested = family.nested
    _check_perms(permutations, nested.top.n_cols, chain.sizes, SlicedPermutation)
    ordering = chain.enumerate_ordered("inner-first")
    design = _relabel(nested.top, ordering, [p.values for p in permutations])
    grids = [
        {"slice_size": nested.prefix_sizes[i - 1], "grid": chain.sizes[i - 1]}
        for i in range(1, chain.layers)
    ]
    grids.append({"rows": nested.top.n_rows, "grid": chain.top_size})
    lifted = None
    if stage == "full":
        lifted = oa_based_lh(design, chain.top_size, seed)
    elif stage != "relabel-only":
        raise SpecError(f"unknown stage {stage!r}")
    return LiftedDesign(
        design, chain.top_size, lifted, "sliced", grids, seed,
        [list(p.values) for p in permutations],
    )


def build_ssfd_grouped(
    family: NoaFamily,
    i: int,
    j: int,
    group_order: Optional[Sequence[GroupElement]] = None,
    seed=0,
    stage: str = "full",
) -> LiftedDesign:
    """Relabel by collapse groups: levels collapsing together under the layer-j
    projection get consecutive integer labels, group blocks ordered by
    `group_order` (default: ascending code of the layer-j representative),
    then lift; slices of the layer-i block size stratify the s_j grid."""
    chain = family.chain
    if not 1 <= j <= i <= chain.layers:
        raise SpecError(f"need 1 <= j <= i <= {chain.layers}, got i={i}, j={j}")
    reps = chain.layer_elements(j)
    if group_order is not None:
        group_order = list(group_order)
        if sorted(e.code for e in group_order) != sorted(e.code for e in reps):
            raise SpecError("group order must list each layer-j element once")
        reps = group_order
    q = chain.top_size // chain.sizes[j - 1]
    label: dict[GroupElement, int] = {}
    for g, alpha in enumerate(reps):
        members = [
            el
            for el in (chain.element_from_code(c) for c in range(chain.top_size))
            if chain.project(j, el) == alpha
        ]
        for offset, el in enumerate(members):
            label[el] = g * q + offset
    design = [[label[e] for e in row] for row in family.nested.top.rows]
    slice_size = family.nested.prefix_sizes[i - 1]
    grids = [
        {"slice_size": slice_size, "grid": chain.sizes[j - 1]},
        {"rows": family.nested.top.n_rows, "grid": chain.top_size},
    ]
    lifted = None
    if stage == "full":
        lifted = oa_based_lh(design, chain.top_size, seed)
    elif stage != "relabel-only":
        raise SpecError(f"unknown stage {stage!r}")
    return LiftedDesign(design, chain.top_size, lifted, "grouped", grids, seed, [])


def compose_qual_quant(
    quant_rows: Sequence[Sequence[int]],
    slice_size: int,
    qual_rows: Sequence[Sequence[int]],
) -> list[list[int]]:
    """Append qualitative row l to every run of slice l; slice count must
    equal the qualitative row count."""
    n = len(quant_rows)
    if slice_size < 1 or n % slice_size:
        raise SpecError(f"slice size {slice_size} does not divide {n} runs")
    v = n // slice_size
    if v != len(qual_rows):
        raise SpecError(
            f"{v} slices but {len(qual_rows)} qualitative level combinations"
        )
    out = []
    for idx, row in enumerate(quant_rows):
        out.append(list(row) + list(qual_rows[idx // slice_size]))
    return out
