"""Timing comparison of the compiled and pure-Python hot kernels.

Run:  python3 benchmarks/lexer_bench.py
"""
import statistics
import sys
import time

sys.path.insert(0, "src")

from mpiassist import bench, cst, metrics

try:
    from mpiassist import _speedups
except ImportError:
    _speedups = None


def time_fn(fn, *args, repeat=5, inner=20):
    runs = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        for _ in range(inner):
            fn(*args)
        runs.append((time.perf_counter() - t0) / inner)
    return min(runs), statistics.mean(runs)


def main():
    text = "\n".join(p.label_code for p in bench.load_programs()) * 10
    print(f"input: {len(text)} chars, {len(cst.tokenize(text))} tokens")
    pure_best, pure_mean = time_fn(cst._pure_lex, text)
    print(f"lex   pure:     best {pure_best * 1e3:8.3f} ms  mean {pure_mean * 1e3:8.3f} ms")
    if _speedups is not None:
        c_best, c_mean = time_fn(_speedups.lex, text)
        print(f"lex   compiled: best {c_best * 1e3:8.3f} ms  mean {c_mean * 1e3:8.3f} ms")
        print(f"lex   speedup:  {pure_best / c_best:.2f}x")
    toks_a = [t.text for t in cst.tokenize(text)][:2000]
    toks_b = list(reversed(toks_a))
    pure_best, _ = time_fn(metrics._pure_lcs_len, toks_a, toks_b, repeat=3, inner=1)
    print(f"lcs   pure:     best {pure_best * 1e3:8.3f} ms")
    if _speedups is not None:
        ids = {}
        a_ids = [ids.setdefault(t, len(ids)) for t in toks_a]
        b_ids = [ids.setdefault(t, len(ids)) for t in toks_b]
        c_best, _ = time_fn(_speedups.lcs_len, a_ids, b_ids, repeat=3, inner=1)
        print(f"lcs   compiled: best {c_best * 1e3:8.3f} ms")
        print(f"lcs   speedup:  {pure_best / c_best:.2f}x")
    if _speedups is None:
        print("compiled extension unavailable; pure-Python numbers only")


if __name__ == "__main__":
    main()
