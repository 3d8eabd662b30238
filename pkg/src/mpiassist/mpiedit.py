"""MPI call detection, pruning, and lexical extraction.

Pruning works at statement granularity only: a whole expression statement
consisting of a single MPI call is deleted.  Calls embedded in larger
statements make a file unpreservable and raise EmbeddedCall.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from importlib import resources

from . import cst
from .errors import EmbeddedCall

CORE_NAMES = frozenset(
    ("MPI_Finalize", "MPI_Comm_rank", "MPI_Comm_size", "MPI_Init",
     "MPI_Recv", "MPI_Send", "MPI_Reduce", "MPI_Bcast")
)

_STATEMENT_KINDS = frozenset(
    ("expression_statement", "declaration", "if_statement", "for_statement",
     "while_statement", "do_statement", "switch_statement", "return_statement",
     "labeled_statement", "other")
)


@dataclass(slots=True)
class MpiCall:
    name: str
    line: int
    col: int = 0
    context: str = "statement"  # statement | embedded


@dataclass(frozen=True)
class MpiInventory:
    all_names: frozenset
    core_names: frozenset = CORE_NAMES


def load_inventory():
    data = resources.files("mpiassist.data").joinpath("mpi_functions.txt")
    names = frozenset(
        line.strip() for line in data.read_text().splitlines() if line.strip()
    )
    return MpiInventory(all_names=names | CORE_NAMES)


@dataclass(slots=True)
class PruneResult:
    pruned_text: str
    removed: list  # MpiCall, sorted by line, lines relative to the input
    removed_lines: list  # exact deleted line texts, parallel to removed


def find_mpi_calls(ast):
    """All call_expression nodes whose callee identifier starts with MPI_."""
    calls = []
    col_by_offset = {tok.offset: tok.col for tok in ast.tokens}

    def walk(node, stmt_ancestor, stmt_expr_is_node):
        for child in node.children:
            child_is_stmt = child.kind in _STATEMENT_KINDS
            if child.kind == "call_expression":
                callee = child.children[0] if child.children else None
                if (
                    callee is not None
                    and callee.kind == "identifier"
                    and callee.leaf_text.startswith("MPI_")
                ):
                    direct = (
                        stmt_ancestor is not None
                        and stmt_ancestor.kind == "expression_statement"
                        and len(stmt_ancestor.children) == 1
                        and stmt_ancestor.children[0] is child
                    )
                    calls.append(
                        MpiCall(
                            name=callee.leaf_text,
                            line=callee.start_line,
                            col=col_by_offset.get(callee.start_byte, 1),
                            context="statement" if direct else "embedded",
                        )
                    )
            next_stmt = child if child_is_stmt else stmt_ancestor
            walk(child, next_stmt, False)

    walk(ast, None, False)
    calls.sort(key=lambda c: (c.line, c.col, c.name))
    return calls


_LEXICAL_CALL = re.compile(r"\bMPI_[A-Za-z0-9_]*[ \t]*\(")


def extract_calls_lexical(text):
    """Scan possibly-unparseable text for MPI_<name>( occurrences.

    Comments and string/char literals are skipped; context is statement if
    the match opens its line, embedded otherwise.
    """
    calls = []
    tokens = cst.tokenize(text)
    line_first = {}
    for tok in tokens:
        if tok.kind == "preprocessor":
            continue
        line_first.setdefault(tok.line, tok)
    for idx, tok in enumerate(tokens):
        if tok.kind != "identifier" or not tok.text.startswith("MPI_"):
            continue
        nxt = tokens[idx + 1] if idx + 1 < len(tokens) else None
        if nxt is None or nxt.text != "(":
            continue
        first = line_first.get(tok.line)
        context = "statement" if first is tok else "embedded"
        calls.append(MpiCall(name=tok.text, line=tok.line, col=tok.col, context=context))
    return calls


def matches_mpi_pattern(text):
    """True if the lexical MPI-call pattern occurs anywhere (incl. strings)."""
    return bool(_LEXICAL_CALL.search(text))


def prune(unit):
    """Remove every statement-context MPI call from a standardized unit."""
    if not unit.parse_ok or unit.ast is None:
        raise ValueError(f"cannot prune unparsed unit {unit.path}")
    calls = find_mpi_calls(unit.ast)
    for call in calls:
        if call.context != "statement":
            raise EmbeddedCall(call.name, call.line)
    lines = unit.text.splitlines()
    doomed = {c.line for c in calls}
    removed_lines = [lines[c.line - 1] for c in calls]
    kept = [ln for i, ln in enumerate(lines, start=1) if i not in doomed]
    stripped = "\n".join(kept)
    if stripped and not stripped.endswith("\n"):
        stripped += "\n"
    pruned_text = cst.standardize(stripped)
    return PruneResult(pruned_text=pruned_text, removed=calls, removed_lines=removed_lines)


def restore(pruned_text, removed, removed_lines):
    """Re-insert pruned call lines at their recorded positions and
    re-standardize; inverse of prune on standardized input."""
    lines = pruned_text.splitlines()
    for call, text in zip(removed, removed_lines):
        lines.insert(call.line - 1, text)
    return cst.standardize("\n".join(lines) + "\n")
