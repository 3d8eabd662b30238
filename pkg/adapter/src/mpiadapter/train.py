"""Training loop: code <sep> X-SBT -> label code, with per-epoch loss CSV."""
from __future__ import annotations

import csv
import dataclasses
import json
import os
import random
from dataclasses import dataclass

import torch
from torch import nn

from . import data as data_mod
from .data import BOS, EOS, PAD, build_vocab, encoder_tokens, load_examples, tokenize_code
from .model import Seq2Seq


@dataclass(slots=True)
class Hyperparams:
    batch_size: int = 32
    epochs: int = 5
    max_len: int = 320
    d_model: int = 128
    nhead: int = 4
    num_layers: int = 2
    dropout: float = 0.1
    lr: float = 1e-3
    seed: int = 0
    max_target_len: int = 400


def set_seed(seed):
    random.seed(seed)
    torch.manual_seed(seed)


def encode_example(ex, vocab, hp):
    src = vocab.encode(encoder_tokens(ex))[: hp.max_len]
    tgt = vocab.encode([BOS] + tokenize_code(ex.label_code) + [EOS])
    tgt = tgt[: hp.max_target_len]
    return src, tgt


def make_batches(encoded, batch_size, rng=None):
    order = list(range(len(encoded)))
    if rng is not None:
        rng.shuffle(order)
    for start in range(0, len(order), batch_size):
        yield [encoded[i] for i in order[start : start + batch_size]]


def collate(batch, pad_id):
    src_len = max(len(s) for s, _ in batch)
    tgt_len = max(len(t) for _, t in batch)
    src = torch.full((len(batch), src_len), pad_id, dtype=torch.long)
    tgt = torch.full((len(batch), tgt_len), pad_id, dtype=torch.long)
    for i, (s, t) in enumerate(batch):
        src[i, : len(s)] = torch.tensor(s)
        tgt[i, : len(t)] = torch.tensor(t)
    return src, tgt


def run_epoch(model, encoded, hp, vocab, optimizer=None, rng=None):
    """One pass; returns (mean loss per token, token accuracy)."""
    pad_id = vocab.stoi[PAD]
    criterion = nn.CrossEntropyLoss(ignore_index=pad_id, reduction="sum")
    training = optimizer is not None
    model.train(training)
    total_loss = 0.0
    total_tokens = 0
    total_correct = 0
    with torch.set_grad_enabled(training):
        for batch in make_batches(encoded, hp.batch_size, rng if training else None):
            src, tgt = collate(batch, pad_id)
            tgt_in, tgt_out = tgt[:, :-1], tgt[:, 1:]
            logits = model(src, tgt_in)
            loss = criterion(logits.reshape(-1, logits.size(-1)), tgt_out.reshape(-1))
            if training:
                optimizer.zero_grad()
                (loss / max(1, tgt_out.ne(pad_id).sum().item())).backward()
                torch.nn.utils.clip_grad_norm_(model.parameters(), 1.0)
                optimizer.step()
            mask = tgt_out.ne(pad_id)
            total_loss += loss.item()
            total_tokens += int(mask.sum())
            total_correct += int((logits.argmax(-1).eq(tgt_out) & mask).sum())
    if total_tokens == 0:
        return 0.0, 0.0
    return total_loss / total_tokens, total_correct / total_tokens


def train(dataset_path, out_dir, hp=None, train_split="train", log=print):
    """Train a model; writes checkpoint.pt, vocab.json, and loss.csv."""
    hp = hp or Hyperparams()
    set_seed(hp.seed)
    train_examples = load_examples(dataset_path, train_split)
    try:
        valid_examples = load_examples(dataset_path, "valid")
    except data_mod.SchemaError:
        valid_examples = train_examples  # tiny corpora may lack a valid split
    vocab = build_vocab(train_examples)
    encoded_train = [encode_example(ex, vocab, hp) for ex in train_examples]
    encoded_valid = [encode_example(ex, vocab, hp) for ex in valid_examples]
    model = Seq2Seq(
        vocab_size=len(vocab),
        d_model=hp.d_model,
        nhead=hp.nhead,
        num_layers=hp.num_layers,
        dropout=hp.dropout,
        pad_id=vocab.stoi[PAD],
    )
    optimizer = torch.optim.Adam(model.parameters(), lr=hp.lr)
    rng = random.Random(hp.seed)
    os.makedirs(out_dir, exist_ok=True)
    history = []
    for epoch in range(1, hp.epochs + 1):
        train_loss, train_acc = run_epoch(
            model, encoded_train, hp, vocab, optimizer, rng
        )
        valid_loss, valid_acc = run_epoch(model, encoded_valid, hp, vocab)
        history.append(
            {
                "epoch": epoch,
                "train_loss": train_loss,
                "valid_loss": valid_loss,
                "token_accuracy": valid_acc,
            }
        )
        log(
            f"epoch {epoch}: train_loss {train_loss:.4f} "
            f"valid_loss {valid_loss:.4f} token_acc {valid_acc:.4f}"
        )
    with open(os.path.join(out_dir, "loss.csv"), "w", newline="",
              encoding="utf-8") as fh:
        writer = csv.DictWriter(
            fh, fieldnames=["epoch", "train_loss", "valid_loss", "token_accuracy"]
        )
        writer.writeheader()
        writer.writerows(history)
    torch.save(
        {
            "model_state": model.state_dict(),
            "hyperparams": dataclasses.asdict(hp),
            "vocab": vocab.to_dict(),
        },
        os.path.join(out_dir, "checkpoint.pt"),
    )
    with open(os.path.join(out_dir, "vocab.json"), "w", encoding="utf-8") as fh:
        json.dump(vocab.to_dict(), fh)
    return history


def load_checkpoint(out_dir):
    path = os.path.join(out_dir, "checkpoint.pt")
    if not os.path.exists(path):
        raise FileNotFoundError(f"no checkpoint at {path}")
    payload = torch.load(path, map_location="cpu", weights_only=False)
    hp = Hyperparams(**payload["hyperparams"])
    vocab = data_mod.Vocab.from_dict(payload["vocab"])
    model = Seq2Seq(
        vocab_size=len(vocab),
        d_model=hp.d_model,
        nhead=hp.nhead,
        num_layers=hp.num_layers,
        dropout=hp.dropout,
        pad_id=vocab.stoi[PAD],
    )
    model.load_state_dict(payload["model_state"])
    model.eval()
    return model, vocab, hp
