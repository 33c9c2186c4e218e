"""Command-line front end: construct, lift, verify, export.

Exit codes: 0 on success, 2 on bad parameters or malformed inputs, 3 when a
brute-force oracle rejects a claim.  Every randomized stage records its seed
and permutations in the output file, and repeated runs of the same job
produce byte-identical files.  NESTFILL_SEED supplies the default seed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from types import SimpleNamespace

from . import __version__
from .arrays import (
    DifferenceMatrix,
    NestedArray,
    OrthogonalArray,
    construct_from_ndm,
    construct_ndm_kron,
    construct_noa_bush,
    construct_noa_kron_multi,
    construct_noa_rh,
    construct_noa_subfield,
    construct_soa_kron,
)
from .errors import NestfillError, SpecError, VerificationFailure
from .groups import (
    GroupChain,
    chain_field_tower,
    chain_from_descriptor,
    chain_subfield_tower,
)
from .io import DesignFile, export_scatter, load, save_csv, save_json, symbols_for
from .kronecker import GroupMatrix
from .spacefill import (
    NestedPermutation,
    SlicedPermutation,
    build_nsfd,
    build_ssfd_grouped,
    build_ssfd_multi,
    gen_nested_permutation,
    gen_sliced_permutation,
)
from .verify import (
    check_difference_matrix,
    check_latin_hypercube,
    check_nested,
    check_nested_dm,
    check_oa_strength,
    check_sliced,
    check_stratification,
)

CONSTRUCT_METHODS = (
    "rh-noa", "subfield-noa", "bush-noa", "ndm-product",
    "kron-soa", "kron-noa", "kron-ndm",
)


def _default_seed(args) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get("NESTFILL_SEED")
    return int(env) if env else 0


def _parse_int_list(text: str) -> list[int]:
    try:
        return [int(v) for v in text.split(",") if v != ""]
    except ValueError:
        raise SpecError(f"expected comma-separated integers, got {text!r}") from None


def _resolve_chain(args, method: str) -> GroupChain:
    if args.chain:
        descriptor = json.loads(Path(args.chain).read_text())
        return chain_from_descriptor(descriptor)
    if args.p is None or not args.u:
        raise SpecError("give either --chain FILE or both --p and --u")
    u_chain = _parse_int_list(args.u)
    modulus = _parse_int_list(args.modulus) if args.modulus else None
    if method in ("subfield-noa", "bush-noa"):
        return chain_subfield_tower(args.p, u_chain, modulus)
    return chain_field_tower(args.p, u_chain, modulus)


def _parse_columns(text: str, chain: GroupChain):
    field = getattr(chain, "field", None)
    if field is None:
        raise SpecError("--columns needs a field or subfield tower chain")
    cols = []
    for chunk in text.split(";"):
        cols.append(tuple(field.element(c) for c in _parse_int_list(chunk)))
    return cols


def _load_input_design(path, chain: GroupChain, layer: int, want: str):
    design = load(path)
    rows = GroupMatrix(
        [[chain.element_from_code(c) for c in row] for row in design.rows]
    )
    levels = design.s if design.s else len(chain.transversal(layer))
    t = design.t_claimed if design.t_claimed else 2
    if want == "oa":
        return OrthogonalArray(rows, levels, t, chain=chain, layer=layer,
                               alphabet="transversal")
    return DifferenceMatrix(rows, levels, chain=chain, layer=layer,
                            alphabet="transversal")


def _write_design(design: DesignFile, out: str, fmt: str) -> Path:
    return save_csv(design, out) if fmt == "csv" else save_json(design, out)


def _write_report(reports, out_path: Path) -> None:
    payload = {
        "passed": all(r.passed for r in reports),
        "checks": [r.to_dict() for r in reports],
    }
    report_path = out_path.with_suffix(out_path.suffix + ".verify.json")
    report_path.write_text(json.dumps(payload, indent=2) + "\n")


def _family_design(fam, method: str, params: dict) -> DesignFile:
    chain = fam.chain
    rows = fam.top.codes()
    return DesignFile(
        type="oa",
        rows=rows,
        s=chain.top_size,
        t_claimed=fam.strength,
        chain=chain.descriptor(),
        layer=chain.layers,
        alphabet="layer",
        layer_prefixes=list(fam.nested.prefix_sizes),
        meta={"tool": "nestfill", "version": __version__, "method": method,
              "params": params},
        symbols=symbols_for(chain, rows),
    )


def cmd_construct(args) -> int:
    method = args.method
    chain = _resolve_chain(args, method)
    params = {"p": getattr(chain, "p", None), "u": getattr(chain, "u_chain", None)
              and list(chain.u_chain), "k": args.k, "chain": chain.descriptor()}
    if method in ("rh-noa", "subfield-noa", "bush-noa"):
        if args.k is None:
            raise SpecError(f"--k is required for {method}")
        columns = _parse_columns(args.columns, chain) if args.columns else None
        if columns is not None:
            params["columns"] = [[e.code for e in col] for col in columns]
        if method == "rh-noa":
            fam = construct_noa_rh(chain, args.k, columns)
        elif method == "subfield-noa":
            fam = construct_noa_subfield(chain, args.k, columns)
        else:
            if columns is not None:
                raise SpecError("bush-noa derives its own coefficient matrix")
            fam = construct_noa_bush(chain, args.k)
        design = _family_design(fam, method, params)
        reports = fam.verification
    elif method == "ndm-product":
        if len(args.input) != 1:
            raise SpecError("ndm-product takes exactly one --input array")
        a = _load_input_design(args.input[0], chain, chain.layers, "oa")
        a = OrthogonalArray(a.matrix, chain.top_size, 2, chain=chain,
                            layer=chain.layers, alphabet="layer")
        bundle = construct_from_ndm(chain, a)
        rows = bundle.combined.codes()
        design = DesignFile(
            type="oa", rows=rows, s=chain.top_size, t_claimed=2,
            chain=chain.descriptor(), layer=chain.layers, alphabet="layer",
            layer_prefixes=list(bundle.noa_nested.prefix_sizes),
            meta={"tool": "nestfill", "version": __version__, "method": method,
                  "params": params},
            symbols=symbols_for(chain, rows),
        )
        d_rows = bundle.d.codes()
        d_design = DesignFile(
            type="dm", rows=d_rows, s=chain.top_size, chain=chain.descriptor(),
            layer=chain.layers, alphabet="layer",
            layer_prefixes=list(bundle.dm_nested.prefix_sizes),
            meta={"tool": "nestfill", "version": __version__,
                  "method": "ndm-product-dm", "params": params},
            symbols=symbols_for(chain, d_rows),
        )
        out = Path(args.out)
        _write_design(d_design, str(out.parent / (out.stem + "-dm" + out.suffix)),
                      args.format)
        reports = bundle.verification
    elif method in ("kron-soa", "kron-noa", "kron-ndm"):
        if not args.input:
            raise SpecError(f"{method} needs --input files in layer order")
        if method == "kron-ndm":
            dms = [
                _load_input_design(p, chain, i, "dm")
                for i, p in enumerate(args.input, start=1)
            ]
            out_obj = construct_ndm_kron(dms, chain)
            rows = out_obj.top.codes()
            design = DesignFile(
                type="dm", rows=rows, s=chain.top_size, chain=chain.descriptor(),
                layer=chain.layers, alphabet="layer",
                layer_prefixes=list(out_obj.nested.prefix_sizes),
                meta={"tool": "nestfill", "version": __version__,
                      "method": method, "params": params},
                symbols=symbols_for(chain, rows),
            )
            reports = out_obj.verification
        else:
            oas = [
                _load_input_design(p, chain, i, "oa")
                for i, p in enumerate(args.input, start=1)
            ]
            if method == "kron-soa":
                if len(oas) != 2:
                    raise SpecError("kron-soa takes exactly two --input arrays")
                out_obj = construct_soa_kron(oas[1], oas[0], chain)
                rows = out_obj.b.matrix.codes()
                design = DesignFile(
                    type="oa", rows=rows, s=chain.top_size,
                    t_claimed=out_obj.strength, chain=chain.descriptor(),
                    layer=chain.layers, alphabet="layer",
                    slice_size=out_obj.soa.slice_size, collapse_layer=1,
                    meta={"tool": "nestfill", "version": __version__,
                          "method": method, "params": params},
                    symbols=symbols_for(chain, rows),
                )
            else:
                out_obj = construct_noa_kron_multi(oas, chain)
                rows = out_obj.top.codes()
                design = DesignFile(
                    type="oa", rows=rows, s=chain.top_size,
                    t_claimed=out_obj.strength, chain=chain.descriptor(),
                    layer=chain.layers, alphabet="layer",
                    layer_prefixes=list(out_obj.nested.prefix_sizes),
                    meta={"tool": "nestfill", "version": __version__,
                          "method": method, "params": params},
                    symbols=symbols_for(chain, rows),
                )
            reports = out_obj.verification
    else:  # pragma: no cover - argparse restricts choices
        raise SpecError(f"unknown method {method!r}")
    out_path = _write_design(design, args.out, args.format)
    _write_report(reports, out_path)
    print(f"wrote {out_path} ({design.type}, {design.n}x{design.m}); "
          f"{len(reports)} checks passed")
    return 0


def _load_family(design: DesignFile):
    chain = design.load_chain()
    if chain is None:
        raise SpecError("design file carries no chain; cannot lift")
    if not design.layer_prefixes:
        raise SpecError("design file carries no layer prefixes; cannot lift")
    if len(design.layer_prefixes) != chain.layers:
        raise SpecError(
            f"{len(design.layer_prefixes)} layer prefixes for a "
            f"{chain.layers}-layer chain"
        )
    top = GroupMatrix(
        [[chain.element_from_code(c) for c in row] for row in design.rows]
    )
    nested = NestedArray(
        chain, top, tuple(design.layer_prefixes),
        tuple(range(1, chain.layers + 1)),
        design.t_claimed or 2,
    )
    return SimpleNamespace(chain=chain, nested=nested, top=top)


def _load_permutations(path, kind: str, chain: GroupChain):
    data = json.loads(Path(path).read_text())
    if data.get("kind") != kind:
        raise SpecError(f"permutation file kind {data.get('kind')!r} != {kind!r}")
    cls = NestedPermutation if kind == "nested" else SlicedPermutation
    return [cls(tuple(v), tuple(chain.sizes)) for v in data["values"]]


def cmd_lift(args) -> int:
    design = load(args.design)
    family = _load_family(design)
    chain = family.chain
    seed = _default_seed(args)
    m = family.top.n_cols
    if args.mode == "nested":
        if args.perms:
            perms = _load_permutations(args.perms, "nested", chain)
        else:
            perms = [
                gen_nested_permutation(chain.sizes, seed, tag=f"np:{c}")
                for c in range(m)
            ]
        lifted = build_nsfd(family, perms, seed=seed, stage=args.stage)
    elif args.mode == "sliced":
        if args.perms:
            perms = _load_permutations(args.perms, "sliced", chain)
        else:
            perms = [
                gen_sliced_permutation(chain.sizes, seed, tag=f"sp:{c}")
                for c in range(m)
            ]
        lifted = build_ssfd_multi(family, perms, seed=seed, stage=args.stage)
    elif args.mode == "grouped":
        if args.i is None or args.j is None:
            raise SpecError("grouped mode needs --i and --j")
        order = None
        if args.group_order:
            order = [
                chain.element_from_code(c) for c in _parse_int_list(args.group_order)
            ]
        lifted = build_ssfd_grouped(
            family, i=args.i, j=args.j, group_order=order, seed=seed,
            stage=args.stage,
        )
    else:  # pragma: no cover
        raise SpecError(f"unknown mode {args.mode!r}")
    meta = {"tool": "nestfill", "version": __version__, "method": f"lift-{args.mode}",
            "source": design.meta, "stage": args.stage}
    if args.stage == "relabel-only":
        out = DesignFile(
            type="design", rows=lifted.design, s=lifted.scale,
            t_claimed=design.t_claimed, chain=design.chain,
            layer_prefixes=design.layer_prefixes, slice_size=design.slice_size,
            permutations=lifted.permutations or None, meta=meta,
        )
    else:
        out = DesignFile(
            type="lh", rows=lifted.lifted, scale=lifted.n, chain=design.chain,
            grids=lifted.grids, seeds={"lift": seed},
            permutations=lifted.permutations or None, meta=meta,
        )
    out_path = _write_design(out, args.out, args.format)
    print(f"wrote {out_path} ({out.type}, {out.n}x{out.m})")
    return 0


def verify_design(design: DesignFile) -> list:
    """Run every oracle the file's annotations claim."""
    reports = []
    chain = design.load_chain()
    if design.type == "lh":
        reports.append(check_latin_hypercube(design.rows))
        scale = design.scale or design.n
        for claim in design.grids or []:
            g = claim["grid"]
            if claim.get("rows"):
                reports.append(
                    check_stratification(
                        design.rows[: claim["rows"]], scale, g,
                        name=f"stratification[first {claim['rows']} rows, g={g}]",
                    )
                )
            elif claim.get("slice_size"):
                size = claim["slice_size"]
                for l in range(design.n // size):
                    reports.append(
                        check_stratification(
                            design.rows[l * size : (l + 1) * size], scale, g,
                            name=f"stratification[slice {l + 1}, g={g}]",
                        )
                    )
        return reports
    if design.type == "design" or chain is None:
        if design.s and design.t_claimed:
            reports.append(check_oa_strength(design.rows, design.s, design.t_claimed))
        else:
            reports.append(check_latin_hypercube(design.rows))
        return reports
    rows = [
        [chain.element_from_code(c) for c in row] for row in design.rows
    ]
    projections = [chain.projection_map(j) for j in range(1, chain.layers + 1)]
    if design.type == "oa":
        t = design.t_claimed or 2
        if design.layer_prefixes:
            layers = [rows[:n] for n in design.layer_prefixes]
            reports.append(
                check_nested(layers, projections, list(chain.sizes), t)
            )
        else:
            reports.append(check_oa_strength(rows, design.s or chain.top_size, t))
        if design.slice_size and design.collapse_layer:
            j = design.collapse_layer
            reports.append(
                check_sliced(rows, design.slice_size, projections[j - 1],
                             chain.sizes[j - 1], t)
            )
    elif design.type == "dm":
        el_sets = [chain.layer_elements(j) for j in range(1, chain.layers + 1)]
        if design.layer_prefixes:
            layers = [rows[:n] for n in design.layer_prefixes]
            reports.append(check_nested_dm(layers, projections, el_sets))
        else:
            reports.append(check_difference_matrix(rows, el_sets[-1]))
    else:
        raise SpecError(f"unknown design type {design.type!r}")
    return reports


def cmd_verify(args) -> int:
    design = load(args.design)
    reports = verify_design(design)
    payload = {
        "design": str(args.design),
        "passed": all(r.passed for r in reports),
        "checks": [r.to_dict() for r in reports],
    }
    text = json.dumps(payload, indent=2)
    if args.out:
        Path(args.out).write_text(text + "\n")
    else:
        print(text)
    for r in reports:
        print(r.message(), file=sys.stderr)
    return 0 if payload["passed"] else 3


def cmd_export(args) -> int:
    design = load(args.design)
    if args.format == "scatter":
        paths = export_scatter(design, args.out)
        print("\n".join(str(p) for p in paths))
        return 0
    path = _write_design(design, args.out, args.format)
    print(f"wrote {path}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nestfill",
        description="Construct, lift, verify and export nested/sliced designs.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build a design and verify it")
    c.add_argument("--method", required=True, choices=CONSTRUCT_METHODS)
    c.add_argument("--p", type=int, help="prime modulus for tower chains")
    c.add_argument("--u", help="comma-separated layer degrees, e.g. 1,2,3")
    c.add_argument("--modulus", help="irreducible polynomial coefficients, low degree first")
    c.add_argument("--chain", help="JSON file with a chain descriptor")
    c.add_argument("--k", type=int, help="number of independent columns")
    c.add_argument("--columns", help="explicit generator columns as code lists, e.g. '1,0;0,1;1,1'")
    c.add_argument("--input", action="append", default=[],
                   help="input design file (repeat in layer order)")
    c.add_argument("--out", required=True)
    c.add_argument("--format", choices=("json", "csv"), default="json")
    c.set_defaults(func=cmd_construct)

    l = sub.add_parser("lift", help="relabel and lift a design to a space-filling one")
    l.add_argument("--design", required=True)
    l.add_argument("--mode", required=True, choices=("nested", "sliced", "grouped"))
    l.add_argument("--stage", choices=("full", "relabel-only"), default="full")
    l.add_argument("--perms", help="JSON file: {kind, values: [[...], ...]}")
    l.add_argument("--seed", type=int)
    l.add_argument("--i", type=int, help="slice granularity layer (grouped mode)")
    l.add_argument("--j", type=int, help="collapse layer (grouped mode)")
    l.add_argument("--group-order", help="comma-separated layer-j codes (grouped mode)")
    l.add_argument("--out", required=True)
    l.add_argument("--format", choices=("json", "csv"), default="json")
    l.set_defaults(func=cmd_lift)

    v = sub.add_parser("verify", help="re-run every oracle a design file claims")
    v.add_argument("--design", required=True)
    v.add_argument("--out", help="write the JSON report here instead of stdout")
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("export", help="convert a design file")
    e.add_argument("--design", required=True)
    e.add_argument("--format", required=True, choices=("json", "csv", "scatter"))
    e.add_argument("--out", required=True)
    e.set_defaults(func=cmd_export)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except VerificationFailure as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return 3
    except NestfillError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
