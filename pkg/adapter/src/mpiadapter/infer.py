"""Greedy decoding into the prediction exchange format (JSON Lines)."""
from __future__ import annotations

import json

import torch

from .data import BOS, EOS, detokenize_code, encoder_tokens, load_examples
from .train import load_checkpoint

FALLBACK_PREDICTION = "/* empty prediction */\n"


def predict_examples(model, vocab, hp, examples, batch_size=16):
    bos_id, eos_id = vocab.stoi[BOS], vocab.stoi[EOS]
    pad_id = model.pad_id
    results = []
    for start in range(0, len(examples), batch_size):
        chunk = examples[start : start + batch_size]
        encoded = [vocab.encode(encoder_tokens(ex))[: hp.max_len] for ex in chunk]
        width = max(len(e) for e in encoded)
        src = torch.full((len(chunk), width), pad_id, dtype=torch.long)
        for i, ids in enumerate(encoded):
            src[i, : len(ids)] = torch.tensor(ids)
        out = model.greedy_decode(src, bos_id, eos_id, max_len=hp.max_target_len)
        for ex, row in zip(chunk, out):
            ids = []
            for v in row.tolist():
                if v == eos_id:
                    break
                ids.append(v)
            text = detokenize_code(vocab.decode(ids))
            results.append((ex.id, text or FALLBACK_PREDICTION))
    return results


def infer(checkpoint_dir, dataset_path, split, out_path, batch_size=16):
    model, vocab, hp = load_checkpoint(checkpoint_dir)
    examples = load_examples(dataset_path, split)
    results = predict_examples(model, vocab, hp, examples, batch_size)
    with open(out_path, "w", encoding="utf-8") as fh:
        for example_id, text in results:
            fh.write(json.dumps({"id": example_id, "predicted_code": text},
                                ensure_ascii=False))
            fh.write("\n")
    return len(results)
