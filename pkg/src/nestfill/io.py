"""Design file formats.

JSON is the primary format: one object holding the integer-code rows, the
chain descriptor, structure annotations (layer prefixes, slice size, grid
claims), the seeds and permutations behind any randomized stage, and a
symbol table mapping codes to element text forms.  CSV carries the same
metadata in a single ``# meta=...`` comment line followed by an ``x1..xm``
header and the code rows.  Scatter export writes one two-column CSV per
dimension pair.

Serialization is deterministic: fixed key order, no timestamps, so repeated
runs of the same job produce byte-identical files.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from . import __version__
from .errors import SpecError
from .groups import GroupChain, chain_from_descriptor

FORMAT_NAME = "nestfill-design"


@dataclass
class DesignFile:
    type: str  # "oa" | "dm" | "design" | "lh"
    rows: list[list[int]]
    s: Optional[int] = None
    t_claimed: Optional[int] = None
    chain: Optional[dict] = None
    layer: Optional[int] = None
    alphabet: Optional[str] = None
    layer_prefixes: Optional[list[int]] = None
    slice_size: Optional[int] = None
    collapse_layer: Optional[int] = None
    grids: Optional[list[dict]] = None
    scale: Optional[int] = None
    qual_columns: Optional[int] = None
    seeds: Optional[dict] = None
    permutations: Optional[list[list[int]]] = None
    meta: dict = field(default_factory=dict)
    symbols: Optional[dict] = None

    def __post_init__(self):
        if not self.rows or not self.rows[0]:
            raise SpecError("design has no rows")
        width = len(self.rows[0])
        for r in self.rows:
            if len(r) != width:
                raise SpecError("ragged design rows")
            if not all(isinstance(v, int) for v in r):
                raise SpecError("design rows must hold integer level codes")

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def m(self) -> int:
        return len(self.rows[0])

    def load_chain(self) -> Optional[GroupChain]:
        return chain_from_descriptor(self.chain) if self.chain else None

    def to_dict(self) -> dict:
        out = {"format": FORMAT_NAME, "version": __version__, "type": self.type,
               "n": self.n, "m": self.m}
        for key in (
            "s", "t_claimed", "chain", "layer", "alphabet", "layer_prefixes",
            "slice_size", "collapse_layer", "grids", "scale", "qual_columns",
            "seeds", "permutations",
        ):
            value = getattr(self, key)
            if value is not None:
                out[key] = value
        if self.meta:
            out["meta"] = self.meta
        if self.symbols is not None:
            out["symbols"] = self.symbols
        out["rows"] = self.rows
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "DesignFile":
        if data.get("format") != FORMAT_NAME:
            raise SpecError("not a nestfill design file")
        kwargs = {}
        for key in (
            "type", "rows", "s", "t_claimed", "chain", "layer", "alphabet",
            "layer_prefixes", "slice_size", "collapse_layer", "grids", "scale",
            "qual_columns", "seeds", "permutations", "meta", "symbols",
        ):
            if key in data:
                kwargs[key] = data[key]
        kwargs.setdefault("meta", {})
        return cls(**kwargs)


def symbols_for(chain: GroupChain, rows) -> dict:
    codes = sorted({v for r in rows for v in r})
    return {str(c): chain.text(chain.element_from_code(c)) for c in codes}


def save_json(design: DesignFile, path) -> Path:
    path = Path(path)
    path.write_text(json.dumps(design.to_dict(), indent=2) + "\n")
    return path


def load(path) -> DesignFile:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise SpecError(f"cannot read {path}: {exc}") from None
    if path.suffix.lower() == ".csv" or text.lstrip().startswith("#"):
        return _load_csv(text)
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError(f"cannot parse {path}: {exc}") from None
    return DesignFile.from_dict(data)


def save_csv(design: DesignFile, path) -> Path:
    path = Path(path)
    payload = design.to_dict()
    rows = payload.pop("rows")
    lines = [f"# {FORMAT_NAME} v{__version__}"]
    lines.append("# meta=" + json.dumps(payload))
    lines.append(",".join(f"x{j + 1}" for j in range(design.m)))
    lines.extend(",".join(str(v) for v in row) for row in rows)
    path.write_text("\n".join(lines) + "\n")
    return path


def _load_csv(text: str) -> DesignFile:
    meta = None
    rows = []
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if body.startswith("meta="):
                meta = json.loads(body[len("meta=") :])
            continue
        if line.startswith("x1"):
            continue
        rows.append([int(v) for v in line.split(",")])
    if meta is None:
        raise SpecError("CSV design is missing its '# meta=' line")
    meta["rows"] = rows
    return DesignFile.from_dict(meta)


def export_scatter(design: DesignFile, out_prefix) -> list[Path]:
    """One CSV of (xi, xj) points per dimension pair of the design."""
    prefix = Path(out_prefix)
    m = design.m
    if m < 2:
        raise SpecError("scatter export needs at least two dimensions")
    paths = []
    for i in range(m):
        for j in range(i + 1, m):
            path = prefix.parent / f"{prefix.name}_x{i + 1}_x{j + 1}.csv"
            lines = [f"x{i + 1},x{j + 1}"]
            lines.extend(f"{row[i]},{row[j]}" for row in design.rows)
            path.write_text("\n".join(lines) + "\n")
            paths.append(path)
    return paths
