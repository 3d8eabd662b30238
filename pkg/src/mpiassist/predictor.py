"""Prediction exchange format and the heuristic Common-Core baseline."""
from __future__ import annotations

import json
from dataclasses import dataclass

from . import cst
from .errors import DuplicateId, FormatError, NoMain


@dataclass(slots=True)
class PredictionRecord:
    id: str
    predicted_code: str


def write_predictions(path, records):
    with open(path, "w", encoding="utf-8") as fh:
        for rec in records:
            fh.write(
                json.dumps(
                    {"id": rec.id, "predicted_code": rec.predicted_code},
                    ensure_ascii=False,
                )
            )
            fh.write("\n")


def read_predictions(path):
    records = []
    seen = set()
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise FormatError(f"invalid JSON: {exc}", lineno) from None
            if "id" not in obj or "predicted_code" not in obj:
                raise FormatError("missing id or predicted_code", lineno)
            rec = PredictionRecord(id=obj["id"], predicted_code=obj["predicted_code"])
            if not rec.id or not isinstance(rec.predicted_code, str) or not rec.predicted_code:
                raise FormatError("empty id or predicted_code", lineno)
            if rec.id in seen:
                raise DuplicateId(rec.id)
            seen.add(rec.id)
            records.append(rec)
    return records


def _find_main(ast):
    for node in ast.walk():
        if node.kind != "function_definition":
            continue
        names = [c for c in node.children if c.kind == "identifier"]
        if names and names[-1].leaf_text == "main":
            return node
    return None


def baseline_predict(input_code):
    """Insert the four Common-Core setup calls at the top of main and
    MPI_Finalize before every return (and at the end on fall-through)."""
    ast = cst.parse(input_code)
    std = cst.render(ast)
    ast = cst.parse(std)
    main = _find_main(ast)
    if main is None:
        raise NoMain("no main function in input")
    params = next(c for c in main.children if c.kind == "parameter_list")
    has_args = any(c.kind == "identifier" for c in params.children)
    init_args = "&argc, &argv" if has_args else "NULL, NULL"
    body = main.children[-1]
    assert body.kind == "compound_statement"
    lines = std.splitlines()
    # opening brace of main's body sits on its own line in standardized text
    open_line = body.start_line
    inserts = [
        "int mpi_rank;",
        "int mpi_size;",
        f"MPI_Init({init_args});",
        "MPI_Comm_rank(MPI_COMM_WORLD, &mpi_rank);",
        "MPI_Comm_size(MPI_COMM_WORLD, &mpi_size);",
    ]
    out = lines[:open_line] + inserts + lines[open_line:]
    # Finalize before each return inside main, walking from the bottom so
    # earlier indices stay valid
    start = open_line + len(inserts)  # index of first body line in out
    end = body.end_line + len(inserts) - 1  # index of main's closing brace
    return_idxs = [
        i for i in range(start, end)
        if out[i].lstrip().startswith("return")
    ]
    falls_through = not (return_idxs and return_idxs[-1] == end - 1)
    for i in reversed(return_idxs):
        out.insert(i, "MPI_Finalize();")
    if falls_through:
        out.insert(end + len(return_idxs), "MPI_Finalize();")
    return cst.standardize("\n".join(out) + "\n")
