"""Corpus statistics: per-file MPI function counts, length histogram,
Init-Finalize ratio histogram."""
from __future__ import annotations

from . import cst, mpiedit

LENGTH_BINS = ("<=10", "11-50", "51-99", ">=100")


def _std_unit(unit):
    if unit.parse_ok and unit.ast is not None:
        return unit
    return cst.parse_unit(unit.path, unit.text)


def function_file_counts(units):
    """Map MPI function name -> number of files it appears in (per-file dedup),
    sorted descending by count."""
    counts = {}
    for unit in units:
        unit = _std_unit(unit)
        if not unit.parse_ok:
            continue
        names = {c.name for c in mpiedit.find_mpi_calls(unit.ast)}
        for name in names:
            counts[name] = counts.get(name, 0) + 1
    return dict(sorted(counts.items(), key=lambda kv: (-kv[1], kv[0])))


def length_bin(n_lines):
    if n_lines <= 10:
        return "<=10"
    if n_lines <= 50:
        return "11-50"
    if n_lines <= 99:
        return "51-99"
    return ">=100"


def length_histogram(units):
    """Counts of standardized line lengths in the four length bins."""
    hist = {b: 0 for b in LENGTH_BINS}
    for unit in units:
        unit = _std_unit(unit)
        if not unit.parse_ok:
            continue
        std = cst.render(unit.ast)
        hist[length_bin(len(std.splitlines()))] += 1
    return hist


def init_finalize_ratio(units):
    """Histogram over [0,1] (bin width 0.1) of the parallel-region ratio.

    ratio = (line of last MPI_Finalize - line of first MPI_Init) / total
    standardized lines, clamped to [0,1]; files lacking either call are
    skipped.
    """
    hist = {round(i * 0.1, 1): 0 for i in range(10)}
    contributing = 0
    for unit in units:
        unit = _std_unit(unit)
        if not unit.parse_ok:
            continue
        std = cst.render(unit.ast)
        calls = mpiedit.find_mpi_calls(cst.parse(std))
        init_lines = [c.line for c in calls if c.name == "MPI_Init"]
        fin_lines = [c.line for c in calls if c.name == "MPI_Finalize"]
        if not init_lines or not fin_lines:
            continue
        total = len(std.splitlines())
        ratio = (max(fin_lines) - min(init_lines)) / total if total else 0.0
        ratio = min(max(ratio, 0.0), 1.0)
        bin_lower = min(int(ratio * 10), 9) / 10
        hist[round(bin_lower, 1)] += 1
        contributing += 1
    return hist, contributing


def histogram_to_gnuplot(hist):
    """Two-column data file body: bin lower edge, count."""
    return "".join(f"{k} {v}\n" for k, v in sorted(hist.items(), key=lambda kv: str(kv[0])))
