"""mpiadapter command line: train and infer."""
from __future__ import annotations

import argparse
import sys

from .data import SchemaError
from .train import Hyperparams


def build_parser():
    parser = argparse.ArgumentParser(prog="mpiadapter")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("train")
    p.add_argument("--dataset", required=True)
    p.add_argument("--out-dir", required=True)
    p.add_argument("--batch-size", type=int, default=32)
    p.add_argument("--epochs", type=int, default=5)
    p.add_argument("--max-len", type=int, default=320)
    p.add_argument("--lr", type=float, default=1e-3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--train-split", default="train",
                   choices=["train", "valid", "test", "all"])

    p = sub.add_parser("infer")
    p.add_argument("--checkpoint", required=True)
    p.add_argument("--dataset", required=True)
    p.add_argument("--split", default="test",
                   choices=["train", "valid", "test", "all"])
    p.add_argument("--out", required=True)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "train":
            from .train import train

            hp = Hyperparams(
                batch_size=args.batch_size,
                epochs=args.epochs,
                max_len=args.max_len,
                lr=args.lr,
                seed=args.seed,
            )
            train(args.dataset, args.out_dir, hp, train_split=args.train_split)
        else:
            from .infer import infer

            n = infer(args.checkpoint, args.dataset, args.split, args.out)
            print(f"{n} predictions -> {args.out}")
        return 0
    except (SchemaError, FileNotFoundError, OSError) as exc:
        print(f"mpiadapter: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
