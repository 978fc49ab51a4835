"""Command-line front end: ``nagata-cw {hilbert,ann,check,hasse,lefschetz}``.

Exit status is 0 on success, 1 on invalid input and 2 when an internal
consistency check fails (closed form against catalecticant ranks, or
annihilator soundness/completeness).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import annihilator as ann
from . import hilbert, lefschetz, oracle
from .faces import NagataInput, ValidationError, build_face_model, export_hasse_dot, hasse_edges
from .parsing import SCHEMA_VERSION, ParseError, parse, to_expression, to_json_document

COMMANDS = ("hilbert", "ann", "check", "hasse", "lefschetz")
JSON_SAFE_MAX = 2**53 - 1

EXIT_OK, EXIT_INVALID, EXIT_MISMATCH = 0, 1, 2


def jsonable(obj):
    """Recursively convert to JSON types; integers beyond 2^53-1 become strings."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, (str, float)):
        return obj
    if isinstance(obj, int):
        return str(obj) if abs(obj) > JSON_SAFE_MAX else obj
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def _echo(inp: NagataInput) -> dict:
    doc = to_json_document(inp)
    doc["expression"] = to_expression(inp)
    return doc


def _table_json(table: hilbert.BigradedTable) -> list[list[int]]:
    return table.rows()


def _hilbert_payload(inp: NagataInput) -> dict:
    model = build_face_model(inp)
    table = hilbert.bigraded_table(model)
    vec = hilbert.hilbert_vector(table)
    return {
        "f_vector": list(model.f_vector),
        "table": _table_json(table),
        "vector": vec,
        "duality_ok": table.duality_ok(),
        "palindromic": hilbert.is_palindromic(vec),
    }


def _generators_payload(gens: ann.GeneratorSet, inp: NagataInput) -> dict:
    groups = {}
    for item, gs in gens.by_item().items():
        groups[str(item)] = [g.format() for g in gs]
    if gens.power_degree is not None:
        names = ",".join(f"U{k + 1}" for k in range(inp.m))
        groups["2"] = [f"({names})^{gens.power_degree}"]
    report = ann.verify_annihilation(gens, inp)
    return {
        "action": gens.action.value,
        "minimalized": gens.minimalized,
        "count": len(gens.generators) + len(gens.power_generators()),
        "generators": groups,
        "verification": {
            "ok": report.ok,
            "checked": report.checked,
            "failures": [
                {"generator": g.format(), "residue": ann.format_residue(res, inp.nx, inp.m)}
                for g, res in report.failures
            ],
        },
    }


def interior_row_note(inp: NagataInput, table: hilbert.BigradedTable) -> Optional[str]:
    """Explain how the interior-row count would misstate the vector when ``d1 == 1``."""
    naive = hilbert.naive_interior_table(build_face_model(inp))
    if naive is None or naive == table:
        return None
    hv, nv = hilbert.hilbert_vector(table), hilbert.hilbert_vector(naive)
    diffs = [k for k in range(len(hv)) if hv[k] != nv[k]]
    k = diffs[0]
    return (
        f"d1 = 1 has no interior rows: row i=1 is the top row with a[1][j] = f_(d2-j). "
        f"Applying the interior count sum_r f_(j,r) there instead gives vector {nv} "
        f"(h_{k} = {nv[k]}), which breaks Gorenstein duality; the closed form and the "
        f"catalecticant ranks agree on {hv} (h_{k} = {hv[k]})."
    )


def run(command: str, inp: NagataInput, minimal: bool = False, trials: int = 10,
        seed: int = 0) -> tuple[dict, int]:
    """Execute one command; returns ``(output document, exit status)``."""
    if command not in COMMANDS:
        raise ValueError(f"unknown command {command!r}")
    doc = {"schema_version": SCHEMA_VERSION, "command": command, "input": _echo(inp)}
    status = EXIT_OK

    if command == "hilbert":
        doc["hilbert"] = _hilbert_payload(inp)

    elif command == "ann":
        model = build_face_model(inp)
        gens = ann.build_generators(inp, model)
        if minimal:
            gens = ann.minimalize(gens, inp)
        payload = _generators_payload(gens, inp)
        payload["listing"] = ann.ideal_listing(gens)
        doc["ann"] = payload

    elif command == "check":
        model = build_face_model(inp)
        closed = hilbert.bigraded_table(model)
        orc = oracle.oracle_bigraded_table(inp)
        mismatches = orc.mismatches(closed)
        gens = ann.build_generators(inp, model)
        sound = ann.verify_annihilation(gens, inp)
        deficits = oracle.span_deficits(gens, inp, orc)
        vec = hilbert.hilbert_vector(closed)
        doc["check"] = {
            "closed_form": _table_json(closed),
            "oracle": _table_json(orc),
            "equal": not mismatches,
            "mismatches": [
                {"i": i, "j": j, "oracle": a, "closed_form": b} for i, j, a, b in mismatches
            ],
            "vector": vec,
            "duality_ok": closed.duality_ok() and orc.duality_ok(),
            "annihilator": {
                "sound": sound.ok,
                "complete": not deficits,
                "deficits": [
                    {"i": i, "j": j, "span": got, "expected": want} for i, j, got, want in deficits
                ],
            },
            "seed": seed,
            "paper_note": interior_row_note(inp, closed),
        }
        if mismatches or deficits or not sound.ok or not doc["check"]["duality_ok"]:
            status = EXIT_MISMATCH

    elif command == "hasse":
        model = build_face_model(inp)
        doc["hasse"] = {
            "nodes": sum(model.f_vector),
            "edges": len(hasse_edges(model)),
            "dot": export_hasse_dot(model),
        }

    elif command == "lefschetz":
        wlp = lefschetz.check_wlp(inp)
        slp = lefschetz.check_slp(inp, trials=trials, seed=seed)
        doc["lefschetz"] = {"wlp": wlp.to_json(), "slp": slp.to_json()}

    return doc, status


def render_text(doc: dict) -> str:
    cmd = doc["command"]
    lines = [f"f = {doc['input']['expression']}  (d1={doc['input']['d1']}, action={doc['input']['action']})"]
    if cmd == "hilbert":
        h = doc["hilbert"]
        lines.append(f"f-vector: {h['f_vector']}")
        lines.append("table a[i][j]:")
        lines.extend("  " + " ".join(f"{v:4d}" for v in row) for row in h["table"])
        lines.append(f"Hilbert vector: {h['vector']}")
        lines.append(f"duality ok: {h['duality_ok']}")
    elif cmd == "ann":
        lines.append(doc["ann"]["listing"].rstrip("\n"))
        v = doc["ann"]["verification"]
        lines.append(f"# annihilates f: {v['ok']} ({v['checked']} generators checked)")
    elif cmd == "check":
        c = doc["check"]
        lines.append(f"closed form == oracle: {c['equal']}")
        lines.append(f"Hilbert vector: {c['vector']}")
        lines.append(f"duality ok: {c['duality_ok']}")
        lines.append(f"annihilator sound: {c['annihilator']['sound']}, complete: {c['annihilator']['complete']}")
        if c["paper_note"]:
            lines.append(f"note: {c['paper_note']}")
    elif cmd == "hasse":
        lines.append(doc["hasse"]["dot"].rstrip("\n"))
    elif cmd == "lefschetz":
        for key in ("wlp", "slp"):
            r = doc["lefschetz"][key]
            lines.append(f"{r['kind']}: {r['verdict']}  {r['note']}".rstrip())
            for c in r["checks"]:
                lines.append(f"  L^{c['k']}: A_{c['deg']} -> A_{c['deg'] + c['k']}  rank {c['rank']}/{c['max_rank']}")
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="nagata-cw", description=__doc__.splitlines()[0])
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("-i", "--input", default="-", help="input file (expression or JSON), '-' for stdin")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--action", choices=("contraction", "differentiation"), default=None,
                   help="pairing action (default: from the document, else contraction)")
    p.add_argument("--minimal", action="store_true", help="minimalize the annihilator generators")
    p.add_argument("--dot", metavar="PATH", help="also write the Hasse diagram DOT text to PATH")
    p.add_argument("--trials", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--m", type=int, default=None, help="number of u-variables for expression input")
    return p


def _emit_error(args, exc: Exception) -> None:
    if args.format == "json":
        err = {"type": type(exc).__name__, "message": str(exc)}
        if isinstance(exc, ParseError):
            err["position"] = exc.position
            err["expected"] = list(exc.expected)
        print(json.dumps({"schema_version": SCHEMA_VERSION, "error": err}), file=sys.stderr)
    else:
        print(f"error: {exc}", file=sys.stderr)


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.input == "-":
            source = sys.stdin.read()
        else:
            with open(args.input, encoding="utf-8") as fh:
                source = fh.read()
        inp = parse(source, action=args.action, m=args.m)
        if args.trials < 1:
            raise ValidationError("--trials must be at least 1")
    except (ValidationError, ValueError, OSError) as exc:
        _emit_error(args, exc)
        return EXIT_INVALID

    doc, status = run(args.command, inp, minimal=args.minimal, trials=args.trials, seed=args.seed)
    if args.dot:
        dot = doc["hasse"]["dot"] if "hasse" in doc else export_hasse_dot(build_face_model(inp))
        with open(args.dot, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(dot)
    if args.format == "json":
        sys.stdout.write(json.dumps(jsonable(doc), indent=2) + "\n")
    else:
        sys.stdout.write(render_text(doc))
    if status == EXIT_MISMATCH and args.format == "json":
        print(json.dumps({"schema_version": SCHEMA_VERSION,
                          "error": {"type": "CheckMismatch", "message": "internal consistency check failed"}}),
              file=sys.stderr)
    return status


if __name__ == "__main__":
    sys.exit(main())
