"""Small transformer encoder-decoder trained from scratch."""
from __future__ import annotations

import math

import torch
from torch import nn


class PositionalEncoding(nn.Module):
    def __init__(self, d_model, max_len=2048):
        super().__init__()
        pe = torch.zeros(max_len, d_model)
        position = torch.arange(max_len).unsqueeze(1).float()
        div = torch.exp(
            torch.arange(0, d_model, 2).float() * (-math.log(10000.0) / d_model)
        )
        pe[:, 0::2] = torch.sin(position * div)
        pe[:, 1::2] = torch.cos(position * div)
        self.register_buffer("pe", pe.unsqueeze(0))

    def forward(self, x):
        return x + self.pe[:, : x.size(1)]


class Seq2Seq(nn.Module):
    def __init__(self, vocab_size, d_model=128, nhead=4, num_layers=2,
                 dim_feedforward=256, dropout=0.1, pad_id=0):
        super().__init__()
        self.pad_id = pad_id
        self.d_model = d_model
        self.embed = nn.Embedding(vocab_size, d_model, padding_idx=pad_id)
        self.pos = PositionalEncoding(d_model)
        self.transformer = nn.Transformer(
            d_model=d_model,
            nhead=nhead,
            num_encoder_layers=num_layers,
            num_decoder_layers=num_layers,
            dim_feedforward=dim_feedforward,
            dropout=dropout,
            batch_first=True,
        )
        self.out = nn.Linear(d_model, vocab_size)

    def _embed(self, ids):
        return self.pos(self.embed(ids) * math.sqrt(self.d_model))

    @staticmethod
    def _causal_mask(n, device):
        # boolean mask so its dtype matches the key-padding masks
        return torch.triu(torch.ones(n, n, dtype=torch.bool, device=device), 1)

    def forward(self, src, tgt_in):
        src_mask = src.eq(self.pad_id)
        tgt_mask = tgt_in.eq(self.pad_id)
        causal = self._causal_mask(tgt_in.size(1), tgt_in.device)
        hidden = self.transformer(
            self._embed(src),
            self._embed(tgt_in),
            tgt_mask=causal,
            src_key_padding_mask=src_mask,
            tgt_key_padding_mask=tgt_mask,
            memory_key_padding_mask=src_mask,
        )
        return self.out(hidden)

    @torch.no_grad()
    def greedy_decode(self, src, bos_id, eos_id, max_len=400):
        self.eval()
        src_mask = src.eq(self.pad_id)
        memory = self.transformer.encoder(
            self._embed(src), src_key_padding_mask=src_mask
        )
        batch = src.size(0)
        ys = torch.full((batch, 1), bos_id, dtype=torch.long, device=src.device)
        finished = torch.zeros(batch, dtype=torch.bool, device=src.device)
        for _ in range(max_len):
            causal = self._causal_mask(ys.size(1), src.device)
            hidden = self.transformer.decoder(
                self._embed(ys), memory,
                tgt_mask=causal, memory_key_padding_mask=src_mask,
            )
            logits = self.out(hidden[:, -1])
            nxt = logits.argmax(dim=-1)
            nxt = torch.where(finished, torch.full_like(nxt, self.pad_id), nxt)
            ys = torch.cat([ys, nxt.unsqueeze(1)], dim=1)
            finished = finished | nxt.eq(eos_id)
            if bool(finished.all()):
                break
        return ys[:, 1:]
