"""Scoring of predicted MPI code: one-line-tolerance call alignment and the
text-similarity metric bundle (BLEU, ROUGE-L, simplified METEOR, exact match).

The simplified METEOR has no stemming or synonymy and is NOT numerically
comparable to values reported by standard METEOR implementations.
"""
from __future__ import annotations

import json
import math
import os
from collections import Counter
from dataclasses import dataclass, field

from . import cst, mpiedit
from .errors import MissingPrediction

ROUGE_BETA = 1.2
METEOR_RECALL_WEIGHT = 9.0
METEOR_PENALTY_WEIGHT = 0.5
METEOR_PENALTY_POWER = 3.0


@dataclass(slots=True)
class MatchOutcome:
    tp: list = field(default_factory=list)  # (pred, gold) MpiCall pairs
    fp: list = field(default_factory=list)  # unmatched predicted calls
    fn: list = field(default_factory=list)  # unmatched gold calls

    def add(self, other):
        self.tp.extend(other.tp)
        self.fp.extend(other.fp)
        self.fn.extend(other.fn)


@dataclass(slots=True)
class MetricsReport:
    m_precision: float
    m_recall: float
    m_f1: float
    mcc_precision: float
    mcc_recall: float
    mcc_f1: float
    bleu: float
    rouge_l: float
    meteor_simple: float
    exact_match_acc: float
    n_examples: int
    vacuous_warning: bool = False

    ROW_ORDER = (
        "m_f1", "m_precision", "m_recall",
        "mcc_f1", "mcc_precision", "mcc_recall",
        "bleu", "meteor_simple", "rouge_l", "exact_match_acc",
    )

    def to_dict(self):
        return {
            "m_precision": self.m_precision,
            "m_recall": self.m_recall,
            "m_f1": self.m_f1,
            "mcc_precision": self.mcc_precision,
            "mcc_recall": self.mcc_recall,
            "mcc_f1": self.mcc_f1,
            "bleu": self.bleu,
            "rouge_l": self.rouge_l,
            "meteor_simple": self.meteor_simple,
            "exact_match_acc": self.exact_match_acc,
            "n_examples": self.n_examples,
            "vacuous_warning": self.vacuous_warning,
        }

    def to_table(self):
        labels = {
            "m_f1": "M-F1", "m_precision": "M-Precision", "m_recall": "M-Recall",
            "mcc_f1": "MCC-F1", "mcc_precision": "MCC-Precision",
            "mcc_recall": "MCC-Recall", "bleu": "BLEU",
            "meteor_simple": "Meteor (simplified)", "rouge_l": "Rouge-l",
            "exact_match_acc": "ACC",
        }
        width = max(len(v) for v in labels.values())
        rows = [
            f"{labels[k]:<{width}}  {getattr(self, k):.4f}"
            for k in self.ROW_ORDER
        ]
        return "\n".join(rows)


# ---------------------------------------------------------------------------
# Call alignment


def align(pred, gold, tolerance=1):
    """Per-name maximum matching where |line_pred - line_gold| <= tolerance.

    Greedy over ascending lines, which is optimal for this interval
    structure (verified against brute force in the test suite).
    """
    outcome = MatchOutcome()
    names = sorted({c.name for c in pred} | {c.name for c in gold})
    for name in names:
        p = sorted((c for c in pred if c.name == name), key=lambda c: c.line)
        g = sorted((c for c in gold if c.name == name), key=lambda c: c.line)
        i = j = 0
        while i < len(p) and j < len(g):
            delta = p[i].line - g[j].line
            if abs(delta) <= tolerance:
                outcome.tp.append((p[i], g[j]))
                i += 1
                j += 1
            elif delta < 0:
                outcome.fp.append(p[i])
                i += 1
            else:
                outcome.fn.append(g[j])
                j += 1
        outcome.fp.extend(p[i:])
        outcome.fn.extend(g[j:])
    return outcome


def prf(tp, fp, fn):
    """Micro precision/recall/F1 with the vacuous convention: an empty
    confusion (no gold, no predictions) scores 1.0 throughout."""
    if tp == 0 and fp == 0 and fn == 0:
        return 1.0, 1.0, 1.0
    precision = tp / (tp + fp) if tp + fp else (1.0 if fn == 0 else 0.0)
    recall = tp / (tp + fn) if tp + fn else (1.0 if fp == 0 else 0.0)
    f1 = 2 * precision * recall / (precision + recall) if precision + recall else 0.0
    return precision, recall, f1


def filter_core(calls):
    return [c for c in calls if c.name in mpiedit.CORE_NAMES]


# ---------------------------------------------------------------------------
# Text metrics (token-level)


def _ngrams(tokens, n):
    return Counter(tuple(tokens[i:i + n]) for i in range(len(tokens) - n + 1))


class BleuAccumulator:
    """Corpus-level BLEU-4: uniform weights, brevity penalty, add-one
    smoothing applied to any order with zero matches."""

    MAX_N = 4

    def __init__(self):
        self.matches = [0] * self.MAX_N
        self.totals = [0] * self.MAX_N
        self.pred_len = 0
        self.ref_len = 0

    def add(self, pred_tokens, ref_tokens):
        self.pred_len += len(pred_tokens)
        self.ref_len += len(ref_tokens)
        for n in range(1, self.MAX_N + 1):
            pred_counts = _ngrams(pred_tokens, n)
            ref_counts = _ngrams(ref_tokens, n)
            self.totals[n - 1] += sum(pred_counts.values())
            self.matches[n - 1] += sum(
                min(count, ref_counts[gram]) for gram, count in pred_counts.items()
            )

    def score(self):
        if self.pred_len == 0:
            return 0.0
        log_sum = 0.0
        for m, t in zip(self.matches, self.totals):
            if t == 0:
                return 0.0
            p = (m + 1) / (t + 1) if m == 0 else m / t
            log_sum += math.log(p)
        geo = math.exp(log_sum / self.MAX_N)
        bp = 1.0 if self.pred_len >= self.ref_len else math.exp(
            1.0 - self.ref_len / self.pred_len
        )
        return bp * geo


def bleu(pred_tokens, ref_tokens):
    acc = BleuAccumulator()
    acc.add(pred_tokens, ref_tokens)
    return acc.score()


def _pure_lcs_len(a, b):
    if not a or not b:
        return 0
    prev = [0] * (len(b) + 1)
    for x in a:
        curr = [0] * (len(b) + 1)
        for j, y in enumerate(b, start=1):
            if x == y:
                curr[j] = prev[j - 1] + 1
            else:
                curr[j] = max(prev[j], curr[j - 1])
        prev = curr
    return prev[-1]


def _select_lcs():
    if os.environ.get("MPIASSIST_PURE"):
        return None
    try:
        from . import _speedups
    except ImportError:
        return None
    return _speedups.lcs_len


_compiled_lcs = _select_lcs()


def lcs_len(a, b):
    if _compiled_lcs is not None:
        ids = {}
        a_ids = [ids.setdefault(t, len(ids)) for t in a]
        b_ids = [ids.setdefault(t, len(ids)) for t in b]
        return _compiled_lcs(a_ids, b_ids)
    return _pure_lcs_len(list(a), list(b))


def rouge_l(pred_tokens, ref_tokens):
    if not pred_tokens or not ref_tokens:
        return 0.0
    lcs = lcs_len(pred_tokens, ref_tokens)
    if lcs == 0:
        return 0.0
    p = lcs / len(pred_tokens)
    r = lcs / len(ref_tokens)
    b2 = ROUGE_BETA**2
    return (1 + b2) * r * p / (r + b2 * p)


def _meteor_alignment(pred_tokens, ref_tokens):
    """Greedy in-order unigram alignment; returns matched (i, j) pairs."""
    used = [False] * len(ref_tokens)
    positions = {}
    for j, tok in enumerate(ref_tokens):
        positions.setdefault(tok, []).append(j)
    pairs = []
    for i, tok in enumerate(pred_tokens):
        for j in positions.get(tok, ()):
            if not used[j]:
                used[j] = True
                pairs.append((i, j))
                break
    return pairs


def meteor_simple(pred_tokens, ref_tokens):
    pairs = _meteor_alignment(pred_tokens, ref_tokens)
    m = len(pairs)
    if m == 0:
        return 0.0
    p = m / len(pred_tokens)
    r = m / len(ref_tokens)
    w = METEOR_RECALL_WEIGHT
    f_mean = (1 + w) * p * r / (r + w * p)
    chunks = 1
    for (i0, j0), (i1, j1) in zip(pairs, pairs[1:]):
        if i1 != i0 + 1 or j1 != j0 + 1:
            chunks += 1
    penalty = METEOR_PENALTY_WEIGHT * (chunks / m) ** METEOR_PENALTY_POWER
    return f_mean * (1.0 - penalty)


def exact_match(pred_text, label_text):
    """Token-sequence equality; whitespace-insensitive."""
    return [t.text for t in cst.tokenize(pred_text)] == [
        t.text for t in cst.tokenize(label_text)
    ]


# ---------------------------------------------------------------------------
# Full evaluation


def _prepare_predicted(text):
    """Standardize predicted code when it parses; use it raw otherwise."""
    try:
        return cst.standardize(text)
    except (cst.ParseError, cst.EncodingError):
        return text


def evaluate_records(examples, predictions_by_id, tolerance=1):
    """Score a set of dataset examples against a prediction map."""
    all_outcome = MatchOutcome()
    core_outcome = MatchOutcome()
    bleu_acc = BleuAccumulator()
    rouge_scores = []
    meteor_scores = []
    exact = 0
    details = []
    any_calls = False
    for ex in examples:
        if ex.id not in predictions_by_id:
            raise MissingPrediction(ex.id)
        pred_text = _prepare_predicted(predictions_by_id[ex.id])
        pred_calls = mpiedit.extract_calls_lexical(pred_text)
        gold_calls = [
            mpiedit.MpiCall(name=c["name"], line=c["line"]) for c in ex.gold_calls
        ]
        if pred_calls or gold_calls:
            any_calls = True
        outcome = align(pred_calls, gold_calls, tolerance)
        all_outcome.add(outcome)
        core = align(filter_core(pred_calls), filter_core(gold_calls), tolerance)
        core_outcome.add(core)
        pred_tokens = [t.text for t in cst.tokenize(pred_text)]
        label_tokens = [t.text for t in cst.tokenize(ex.label_code)]
        bleu_acc.add(pred_tokens, label_tokens)
        rouge_scores.append(rouge_l(pred_tokens, label_tokens))
        meteor_scores.append(meteor_simple(pred_tokens, label_tokens))
        is_exact = pred_tokens == label_tokens
        exact += is_exact
        ex_p, ex_r, ex_f = prf(len(outcome.tp), len(outcome.fp), len(outcome.fn))
        details.append(
            {
                "id": ex.id,
                "tp": len(outcome.tp),
                "fp": len(outcome.fp),
                "fn": len(outcome.fn),
                "precision": ex_p,
                "recall": ex_r,
                "f1": ex_f,
                "exact_match": bool(is_exact),
            }
        )
    n = len(examples)
    m_p, m_r, m_f = prf(len(all_outcome.tp), len(all_outcome.fp), len(all_outcome.fn))
    c_p, c_r, c_f = prf(
        len(core_outcome.tp), len(core_outcome.fp), len(core_outcome.fn)
    )
    report = MetricsReport(
        m_precision=m_p,
        m_recall=m_r,
        m_f1=m_f,
        mcc_precision=c_p,
        mcc_recall=c_r,
        mcc_f1=c_f,
        bleu=bleu_acc.score() if n else 0.0,
        rouge_l=sum(rouge_scores) / n if n else 0.0,
        meteor_simple=sum(meteor_scores) / n if n else 0.0,
        exact_match_acc=exact / n if n else 0.0,
        n_examples=n,
        vacuous_warning=n > 0 and not any_calls,
    )
    return report, details


def evaluate(dataset_path, predictions_path, tolerance=1, split="test",
             detail_path=None):
    """File-level entry point: JSON Lines in, MetricsReport (+ detail) out."""
    from . import corpus, predictor

    examples = corpus.load_dataset(dataset_path)
    if split != "all":
        examples = [ex for ex in examples if ex.split == split]
    records = predictor.read_predictions(predictions_path)
    by_id = {rec.id: rec.predicted_code for rec in records}
    report, details = evaluate_records(examples, by_id, tolerance)
    if detail_path:
        with open(detail_path, "w", encoding="utf-8") as fh:
            for row in details:
                fh.write(json.dumps(row))
                fh.write("\n")
    return report, details
