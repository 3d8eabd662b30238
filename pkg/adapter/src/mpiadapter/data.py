"""Dataset loading, tokenization, and vocabulary for the adapter.

Tokenization is line-aware whitespace splitting: every source line ends in
an explicit newline token so decoded output restores the original line
structure (preprocessor directives must stay on their own lines).
"""
from __future__ import annotations

import json
from dataclasses import dataclass

PAD, BOS, EOS, UNK, SEP, NL = "<pad>", "<bos>", "<eos>", "<unk>", "<sep>", "<nl>"
SPECIALS = (PAD, BOS, EOS, UNK, SEP, NL)

REQUIRED_FIELDS = ("id", "input_code", "input_xsbt", "label_code", "split")


class SchemaError(ValueError):
    pass


@dataclass(slots=True)
class Example:
    id: str
    input_code: str
    input_xsbt: str
    label_code: str
    split: str


def load_examples(path, split="all"):
    examples = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise SchemaError(f"{path}:{lineno}: invalid JSON: {exc}") from None
            missing = [f for f in REQUIRED_FIELDS if f not in obj]
            if missing:
                raise SchemaError(f"{path}:{lineno}: missing fields {missing}")
            if not obj["id"] or not obj["label_code"]:
                raise SchemaError(f"{path}:{lineno}: empty id or label_code")
            examples.append(
                Example(
                    id=obj["id"],
                    input_code=obj["input_code"],
                    input_xsbt=obj["input_xsbt"],
                    label_code=obj["label_code"],
                    split=obj["split"],
                )
            )
    if split != "all":
        if split not in ("train", "valid", "test"):
            raise SchemaError(f"unknown split {split!r}")
        examples = [ex for ex in examples if ex.split == split]
    if not examples:
        raise SchemaError(f"{path}: no examples for split {split!r}")
    return examples


def tokenize_code(text):
    """Whitespace tokens with an explicit newline marker per line."""
    tokens = []
    for line in text.splitlines():
        parts = line.split()
        if not parts:
            continue
        tokens.extend(parts)
        tokens.append(NL)
    return tokens


def detokenize_code(tokens):
    """Inverse of tokenize_code up to intra-line spacing."""
    lines = []
    current = []
    for tok in tokens:
        if tok == NL:
            lines.append(" ".join(current))
            current = []
        elif tok not in SPECIALS:
            current.append(tok)
    if current:
        lines.append(" ".join(current))
    return "\n".join(lines) + "\n" if lines else ""


def encoder_tokens(example):
    return tokenize_code(example.input_code) + [SEP] + example.input_xsbt.split()


class Vocab:
    def __init__(self, tokens):
        self.itos = list(SPECIALS)
        seen = set(self.itos)
        for tok in tokens:
            if tok not in seen:
                seen.add(tok)
                self.itos.append(tok)
        self.stoi = {t: i for i, t in enumerate(self.itos)}

    def __len__(self):
        return len(self.itos)

    def encode(self, tokens):
        unk = self.stoi[UNK]
        return [self.stoi.get(t, unk) for t in tokens]

    def decode(self, ids):
        return [self.itos[i] for i in ids if 0 <= i < len(self.itos)]

    def to_dict(self):
        return {"itos": self.itos}

    @classmethod
    def from_dict(cls, payload):
        vocab = cls([])
        vocab.itos = list(payload["itos"])
        vocab.stoi = {t: i for i, t in enumerate(vocab.itos)}
        return vocab


def build_vocab(examples):
    stream = []
    for ex in examples:
        stream.extend(encoder_tokens(ex))
        stream.extend(tokenize_code(ex.label_code))
    return Vocab(stream)
