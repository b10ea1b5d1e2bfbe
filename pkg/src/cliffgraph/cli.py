"""Command-line interface.

Graph inputs are a family spec (``path:7``, ``gkm:3,2``, ``dynkin:E8``,
``union:(complete:3,complete:3)``), a graph6 literal, a file containing a
graph6 record, or ``-`` for graph6 on stdin.  Exit codes: 0 success,
2 input error, 3 capacity error.
"""

from __future__ import annotations

import argparse
import json
import pathlib
import sys

from . import census as census_mod
from . import structure
from .algebra import (
    UNIT_COEFFICIENTS,
    AlgebraElement,
    SignedMonomial,
    center_basis,
    central_idempotent,
    mask_from_vertices,
    monomial_vertices,
    render_monomial,
)
from .errors import CapacityError, CliffGraphError, ParameterError
from .graphs import Graph, build_family, emit_graph6, looks_like_family, parse_family, parse_graph6

STRETCH_VERTICES = 8


def _load_graph(source: str) -> Graph:
    if source == "-":
        return parse_graph6(sys.stdin.read())
    if looks_like_family(source):
        return build_family(parse_family(source))
    p = pathlib.Path(source)
    if p.is_file():
        for line in p.read_text().splitlines():
            if line.strip():
                return parse_graph6(line.strip())
        raise ParameterError(f"no graph6 record found in {source}")
    return parse_graph6(source)


def _vertices_1based(mask: int) -> list[int]:
    return [v + 1 for v in monomial_vertices(mask)]


def _emit(args, payload: dict, text_lines: list[str], tsv_lines: list[list]):
    if args.format == "json":
        print(json.dumps(payload, ensure_ascii=False, indent=2))
    elif args.format == "tsv":
        for row in tsv_lines:
            print("\t".join(str(cell) for cell in row))
    else:
        for line in text_lines:
            print(line)


def _require_stretch(args, n: int):
    if n >= STRETCH_VERTICES and not args.stretch:
        raise ParameterError(
            f"the census at {STRETCH_VERTICES} vertices takes minutes; pass --stretch to confirm"
        )


# ---------------------------------------------------------------------------
# commands

def _cmd_analyze(args) -> None:
    report = structure.classify(_load_graph(args.input))
    payload = {
        "n": report.n, "rank": report.rank, "k": report.k, "m": report.m,
        "center_dim": report.center_dim, "summary": report.summary,
    }
    text = [f"{key} = {value}" for key, value in payload.items()]
    _emit(args, payload, text, [list(payload.keys()), list(payload.values())])


def _cmd_center(args) -> None:
    g = _load_graph(args.input)
    basis = center_basis(g, mode=args.mode)
    monomials = [_vertices_1based(m) for m in basis.monomials]
    payload = {
        "n": g.n, "mode": basis.mode, "nullity": basis.nullity,
        "center_dim": basis.center_dim, "monomials": monomials,
    }
    text = [f"mode = {basis.mode}", f"nullity = {basis.nullity}",
            f"center_dim = {basis.center_dim}"]
    text += [render_monomial(m) for m in basis.monomials]
    tsv = [["mode", basis.mode], ["nullity", basis.nullity], ["center_dim", basis.center_dim]]
    tsv += [verts for verts in monomials]
    _emit(args, payload, text, tsv)


def _cmd_idempotent(args) -> None:
    g = _load_graph(args.input)
    if args.monomial:
        try:
            vertices = [int(tok) - 1 for tok in args.monomial.split(",")]
        except ValueError:
            raise ParameterError(f"--monomial expects comma-separated vertex numbers, got {args.monomial!r}")
        mask = mask_from_vertices(vertices, g.n)
    else:
        candidates = [m for m in center_basis(g, mode="explicit").monomials if m != 0]
        if not candidates:
            raise ParameterError("the center is trivial; no nonempty central monomial exists")
        mask = min(candidates)
    element = central_idempotent(g, mask)
    terms = [
        {"monomial": _vertices_1based(m), "re": str(c.re), "im": str(c.im)}
        for m, c in element.sorted_terms()
    ]
    payload = {"n": g.n, "monomial": _vertices_1based(mask), "terms": terms}
    text = [f"monomial = {render_monomial(mask)}", f"idempotent = {element}"]
    tsv = [[render_monomial(m), t["re"], t["im"]] for m, t in zip(sorted(element.terms), terms)]
    _emit(args, payload, text, tsv)


def _witness_payload(w: structure.IsomorphismWitness) -> dict:
    return {
        "source_graph6": emit_graph6(w.source).decode("ascii"),
        "target_graph6": emit_graph6(w.target).decode("ascii"),
        "n": w.source.n,
        "k": w.target.edge_count(),
        "m": w.target.n - 2 * w.target.edge_count(),
        "images": [
            {
                "generator": t + 1,
                "coefficient": str(sm.coeff),
                "mask": sm.mask,
                "vertices": _vertices_1based(sm.mask),
            }
            for t, sm in enumerate(w.images)
        ],
    }


def _cmd_reduce(args) -> None:
    g = _load_graph(args.input)
    target, witness = structure.reduce_to_canonical(g)
    payload = _witness_payload(witness)
    text = [f"source = {payload['source_graph6']}",
            f"target = {payload['target_graph6']} (k={payload['k']}, m={payload['m']})"]
    text += [f"e'_{img['generator']} = {img['coefficient']} {render_monomial(img['mask'])}"
             for img in payload["images"]]
    tsv = [[img["generator"], img["coefficient"], img["mask"]] for img in payload["images"]]
    _emit(args, payload, text, tsv)


def _read_witness(source: str) -> structure.IsomorphismWitness:
    if source == "-":
        raw = sys.stdin.read()
    else:
        p = pathlib.Path(source)
        if not p.is_file():
            raise ParameterError(f"witness file not found: {source}")
        raw = p.read_text()
    try:
        doc = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ParameterError(f"witness is not valid JSON: {exc}")
    try:
        source_g = parse_graph6(doc["source_graph6"])
        target_g = parse_graph6(doc["target_graph6"])
        entries = sorted(doc["images"], key=lambda img: img["generator"])
        images = []
        for img in entries:
            coeff = UNIT_COEFFICIENTS.get(img["coefficient"])
            if coeff is None:
                raise ParameterError(f"coefficient must be one of 1,-1,i,-i, got {img['coefficient']!r}")
            if "mask" in img:
                mask = int(img["mask"])
            else:
                mask = mask_from_vertices([v - 1 for v in img["vertices"]], source_g.n)
            images.append(SignedMonomial(coeff, mask))
    except (KeyError, TypeError) as exc:
        raise ParameterError(f"witness JSON is missing field {exc}")
    return structure.IsomorphismWitness(source_g, target_g, tuple(images))


def _cmd_validate(args) -> None:
    report = structure.validate_witness(_read_witness(args.input))
    payload = {"valid": report.ok, "diagnostic": report.diagnostic}
    text = ["valid"] if report.ok else [f"invalid: {report.diagnostic}"]
    _emit(args, payload, text, [["valid", report.ok], ["diagnostic", report.diagnostic or ""]])


def _cmd_census(args) -> None:
    _require_stretch(args, args.n)
    table = census_mod.census_table(args.n)
    rows = [
        {
            "rank": r.rank, "center_dim": r.center_dim, "det_parity": r.det_parity,
            "invertible": r.invertible, "mating": r.mating, "isolated": r.isolated,
            "count": r.count,
        }
        for r in table.rows
    ]
    payload = {"n": table.n, "total": table.total, "rows": rows}
    header = ["rank", "center_dim", "det_parity", "invertible", "mating", "isolated", "count"]
    tsv = [header] + [[row[h] for h in header] for row in rows]
    text = [f"n = {table.n}, classes = {table.total}"]
    text += ["  ".join(f"{h}={row[h]}" for h in header) for row in rows]
    _emit(args, payload, text, tsv)


def _cmd_sequences(args) -> None:
    n_max = args.max_vertices
    if n_max >= STRETCH_VERTICES and not args.stretch:
        raise ParameterError(
            f"computing terms at {STRETCH_VERTICES} vertices takes minutes; pass --stretch to confirm"
        )
    n_terms = n_max // 2 if args.id == "A141040" else n_max
    if n_terms < 1:
        raise ParameterError(f"--max-vertices {n_max} yields no terms for {args.id}")
    terms = census_mod.sequence_terms(args.id, n_terms)
    payload = {
        "id": args.id,
        "description": census_mod.SEQUENCE_DESCRIPTIONS[args.id],
        "terms": terms,
    }
    text = [f"{args.id}: {census_mod.SEQUENCE_DESCRIPTIONS[args.id]}"]
    text += [f"a({t['index']}) = {t['value']}  [{t['vertices']} vertices, {t['provenance']}]"
             for t in terms]
    tsv = [["index", "vertices", "value", "provenance"]]
    tsv += [[t["index"], t["vertices"], t["value"], t["provenance"]] for t in terms]
    _emit(args, payload, text, tsv)


def _cmd_dynkin(args) -> None:
    rows = structure.dynkin_table(args.max_rank)
    row_dicts = [
        {
            "family": r.family, "index": r.index, "n": r.n,
            "center_dim": r.center_dim, "expected_dim": r.expected_dim, "matches": r.matches,
        }
        for r in rows
    ]
    payload = {"max_rank": args.max_rank, "all_match": all(r.matches for r in rows),
               "rows": row_dicts}
    text = [f"{r.family}{r.index}: center_dim = {r.center_dim} "
            f"(expected {r.expected_dim}, {'ok' if r.matches else 'MISMATCH'})" for r in rows]
    header = ["family", "index", "n", "center_dim", "expected_dim", "matches"]
    tsv = [header] + [[d[h] for h in header] for d in row_dicts]
    _emit(args, payload, text, tsv)


def _cmd_hierarchy(args) -> None:
    _require_stretch(args, args.n)
    report = census_mod.hierarchy_check(args.n)
    payload = {
        "n": report.n,
        "odd_count": report.odd_count,
        "invertible_count": report.invertible_count,
        "mating_count": report.mating_count,
        "odd_subset_of_invertible": report.odd_subset_of_invertible,
        "invertible_subset_of_mating": report.invertible_subset_of_mating,
        "invertible_even": list(report.invertible_even),
        "mating_not_odd": list(report.mating_not_odd),
    }
    text = [
        f"n = {report.n}",
        f"odd-determinant classes = {report.odd_count}",
        f"invertible classes = {report.invertible_count}",
        f"mating classes = {report.mating_count}",
        f"odd-determinant subset of invertible: {report.odd_subset_of_invertible}",
        f"invertible subset of mating: {report.invertible_subset_of_mating}",
        f"invertible with even determinant ({len(report.invertible_even)}): "
        + " ".join(report.invertible_even),
        f"mating but not odd-determinant ({len(report.mating_not_odd)}): "
        + " ".join(report.mating_not_odd),
    ]
    tsv = [[key, payload[key]] for key in
           ("n", "odd_count", "invertible_count", "mating_count")]
    tsv += [["invertible_even", " ".join(report.invertible_even)]]
    tsv += [["mating_not_odd", " ".join(report.mating_not_odd)]]
    _emit(args, payload, text, tsv)


# ---------------------------------------------------------------------------
# parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cliffgraph",
        description="Clifford algebras of graphs: structure, canonical reduction, census.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, handler, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--format", choices=("json", "tsv", "text"), default="text")
        p.set_defaults(handler=handler)
        return p

    p = add("analyze", _cmd_analyze, "structure report for a graph")
    p.add_argument("input", help="family spec, graph6, file, or - for stdin")

    p = add("center", _cmd_center, "central monomials of a graph's algebra")
    p.add_argument("input")
    p.add_argument("--mode", choices=("basis", "explicit"), default="basis")

    p = add("idempotent", _cmd_idempotent, "central idempotent for a central monomial")
    p.add_argument("input")
    p.add_argument("--monomial", help="comma-separated 1-based vertices, e.g. 1,3,5")

    p = add("reduce", _cmd_reduce, "reduce to the canonical class representative")
    p.add_argument("input")

    p = add("validate", _cmd_validate, "check a witness JSON document")
    p.add_argument("input", help="witness JSON file, or - for stdin")

    p = add("census", _cmd_census, "class counts by property profile")
    p.add_argument("n", type=int)
    p.add_argument("--stretch", action="store_true",
                   help="allow the long-running 8-vertex census")

    p = add("sequences", _cmd_sequences, "reproduce a counting sequence")
    p.add_argument("id", choices=sorted(census_mod.SEQUENCE_DESCRIPTIONS))
    p.add_argument("--max-vertices", type=int, default=7)
    p.add_argument("--stretch", action="store_true")

    p = add("dynkin", _cmd_dynkin, "center dimensions for Dynkin diagrams")
    p.add_argument("--max-rank", type=int, default=12)

    p = add("hierarchy", _cmd_hierarchy, "odd-determinant < invertible < mating report")
    p.add_argument("n", type=int)
    p.add_argument("--stretch", action="store_true")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.handler(args)
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except CliffGraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
