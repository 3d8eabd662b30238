"""Dataset construction: scan, admit, prune, emit JSON Lines triples, split."""
from __future__ import annotations

import hashlib
import json
import logging
import time
from dataclasses import dataclass, field

from . import cst, linearize, mpiedit
from .errors import EmbeddedCall, FormatError, HttpError, RateLimited

log = logging.getLogger(__name__)

GH_TOKEN_ENV = "MPIASSIST_GH_TOKEN"


@dataclass(slots=True)
class CorpusConfig:
    token_limit: int = 320
    seed: int = 0
    ratios: tuple = (0.8, 0.1, 0.1)


@dataclass(slots=True)
class InclusionReport:
    path: str
    verdict: str  # included | excluded
    reason: str = ""  # parse_failure | no_main | over_token_limit |
    #                   no_mpi_calls | embedded_mpi_call | duplicate


@dataclass(slots=True)
class DatasetExample:
    id: str
    input_code: str
    input_xsbt: str
    label_code: str
    gold_calls: list  # [{"name": ..., "line": ...}]
    split: str

    def to_json(self):
        return json.dumps(
            {
                "id": self.id,
                "input_code": self.input_code,
                "input_xsbt": self.input_xsbt,
                "label_code": self.label_code,
                "gold_calls": self.gold_calls,
                "split": self.split,
            },
            ensure_ascii=False,
        )


def example_from_json(line, lineno=0):
    try:
        obj = json.loads(line)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}", lineno) from None
    try:
        return DatasetExample(
            id=obj["id"],
            input_code=obj["input_code"],
            input_xsbt=obj["input_xsbt"],
            label_code=obj["label_code"],
            gold_calls=obj["gold_calls"],
            split=obj["split"],
        )
    except KeyError as exc:
        raise FormatError(f"missing field {exc}", lineno) from None


def load_dataset(path):
    examples = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if line.strip():
                examples.append(example_from_json(line, lineno))
    return examples


def write_dataset(path, examples):
    with open(path, "w", encoding="utf-8") as fh:
        for ex in examples:
            fh.write(ex.to_json())
            fh.write("\n")


def validate_example(ex, config=None):
    """Full-scan schema check of one example's invariants."""
    limit = (config or CorpusConfig()).token_limit
    if mpiedit.matches_mpi_pattern(ex.input_code):
        raise FormatError(f"{ex.id}: input_code still contains MPI calls")
    if cst.token_count(ex.label_code) > limit:
        raise FormatError(f"{ex.id}: label exceeds {limit} tokens")
    found = mpiedit.extract_calls_lexical(ex.label_code)
    got = [{"name": c.name, "line": c.line} for c in found]
    if got != ex.gold_calls:
        raise FormatError(f"{ex.id}: gold_calls do not match label_code")
    if ex.split not in ("train", "valid", "test"):
        raise FormatError(f"{ex.id}: bad split {ex.split!r}")


# ---------------------------------------------------------------------------
# Scanning and admission


def scan(root):
    """Yield SourceUnits for every .c file under root, lexicographic order."""
    from pathlib import Path

    paths = sorted(
        (p for p in Path(root).rglob("*") if p.is_file() and p.suffix.lower() == ".c"),
        key=lambda p: p.as_posix(),
    )
    for path in paths:
        try:
            text = cst.decode_source(path.read_bytes())
        except (OSError, cst.EncodingError) as exc:
            log.warning("skipping %s: %s", path, exc)
            continue
        yield cst.SourceUnit(path=path.as_posix(), text=text)


def _has_main(ast):
    for node in ast.walk():
        if node.kind != "function_definition":
            continue
        names = [c for c in node.children if c.kind == "identifier"]
        if names and names[-1].leaf_text == "main":
            return True
    return False


def admit(unit, config, seen=None):
    """Apply the inclusion/exclusion chain; returns (report, std_unit|None)."""
    try:
        ast = cst.parse(unit.text)
    except (cst.ParseError, cst.EncodingError):
        return InclusionReport(unit.path, "excluded", "parse_failure"), None
    if not _has_main(ast):
        return InclusionReport(unit.path, "excluded", "no_main"), None
    if cst.token_count(unit.text) > config.token_limit:
        return InclusionReport(unit.path, "excluded", "over_token_limit"), None
    std_text = cst.render(ast)
    std_unit = cst.parse_unit(unit.path, std_text)
    calls = mpiedit.find_mpi_calls(std_unit.ast)
    if not calls:
        return InclusionReport(unit.path, "excluded", "no_mpi_calls"), None
    if any(c.context != "statement" for c in calls):
        return InclusionReport(unit.path, "excluded", "embedded_mpi_call"), None
    digest = hashlib.sha256(std_text.encode("utf-8")).hexdigest()
    if seen is not None:
        if digest in seen:
            return InclusionReport(unit.path, "excluded", "duplicate"), None
        seen.add(digest)
    return InclusionReport(unit.path, "included"), std_unit


def assign_split(example_id, config):
    h = hashlib.sha256(f"{config.seed}:{example_id}".encode()).digest()
    frac = int.from_bytes(h[:8], "big") / 2**64
    train, valid, _ = config.ratios
    if frac < train:
        return "train"
    if frac < train + valid:
        return "valid"
    return "test"


def build_dataset(units, config=None):
    """Run the full admission + pruning pipeline over an iterable of units."""
    config = config or CorpusConfig()
    seen = set()
    examples = []
    reason_counts = {}
    included = 0
    for unit in units:
        report, std_unit = admit(unit, config, seen)
        if report.verdict == "excluded":
            reason_counts[report.reason] = reason_counts.get(report.reason, 0) + 1
            continue
        try:
            result = mpiedit.prune(std_unit)
        except EmbeddedCall:  # unreachable after admit, kept as a guard
            reason_counts["embedded_mpi_call"] = (
                reason_counts.get("embedded_mpi_call", 0) + 1
            )
            continue
        included += 1
        example_id = hashlib.sha256(std_unit.text.encode("utf-8")).hexdigest()[:16]
        pruned_ast = cst.parse(result.pruned_text)
        examples.append(
            DatasetExample(
                id=example_id,
                input_code=result.pruned_text,
                input_xsbt=linearize.xsbt_text(pruned_ast),
                label_code=std_unit.text,
                gold_calls=[{"name": c.name, "line": c.line} for c in result.removed],
                split=assign_split(example_id, config),
            )
        )
    split_sizes = {"train": 0, "valid": 0, "test": 0}
    for ex in examples:
        split_sizes[ex.split] += 1
    manifest = {
        "included": included,
        "excluded": reason_counts,
        "splits": split_sizes,
        "config": {
            "token_limit": config.token_limit,
            "seed": config.seed,
            "ratios": list(config.ratios),
        },
    }
    return examples, manifest


# ---------------------------------------------------------------------------
# Repository mining

SEARCH_URL = "https://api.github.com/search/repositories"
CLONE_COMMAND = "git clone --depth 1 {url}"


def fetch_repo_list(query, auth, session=None, per_page=100, max_pages=10):
    """Page through the repository search API and return clone URLs.

    Cloning itself is delegated to an external command (CLONE_COMMAND);
    callers record it in their manifest.
    """
    if session is None:
        import requests

        session = requests.Session()
    headers = {"Accept": "application/vnd.github+json"}
    if auth:
        headers["Authorization"] = f"Bearer {auth}"
    urls = []
    for page in range(1, max_pages + 1):
        resp = session.get(
            SEARCH_URL,
            params={"q": query, "per_page": per_page, "page": page},
            headers=headers,
        )
        if resp.status_code == 403 and "Retry-After" in resp.headers:
            retry_after = float(resp.headers["Retry-After"])
            raise RateLimited(retry_after)
        if resp.status_code != 200:
            raise HttpError(resp.status_code, resp.text)
        items = resp.json().get("items", [])
        if not items:
            break
        urls.extend(item["clone_url"] for item in items)
        if len(items) < per_page:
            break
    return urls


def fetch_repo_list_with_retry(query, auth, session=None, retries=3, **kwargs):
    for attempt in range(retries):
        try:
            return fetch_repo_list(query, auth, session=session, **kwargs)
        except RateLimited as exc:
            if attempt == retries - 1:
                raise
            time.sleep(exc.retry_after)
    raise AssertionError("unreachable")
