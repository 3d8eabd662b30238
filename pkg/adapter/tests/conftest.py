"""Shared fixtures: tiny datasets in the toolkit's JSON Lines format.

The primary package (mpiassist) is used here only to author valid fixture
data and to verify our outputs against its evaluator — the adapter itself
never imports it.
"""
import json

import pytest
from mpiassist import corpus, cst


def tiny_program(i):
    return f"""#include <mpi.h>
int main()
{{
    int val{i};
    int out{i};
    MPI_Init(NULL, NULL);
    val{i} = {i * 13 + 5};
    MPI_Bcast(&val{i}, 1, MPI_INT, 0, MPI_COMM_WORLD);
    MPI_Reduce(&val{i}, &out{i}, 1, MPI_INT, MPI_SUM, {i % 3}, MPI_COMM_WORLD);
    MPI_Finalize();
    return 0;
}}
"""


def build_jsonl(path, n, split=None, seed=0):
    units = [
        cst.SourceUnit(path=f"p{i}.c", text=tiny_program(i)) for i in range(n)
    ]
    examples, _ = corpus.build_dataset(units, corpus.CorpusConfig(seed=seed))
    with open(path, "w", encoding="utf-8") as fh:
        for ex in examples:
            obj = json.loads(ex.to_json())
            if split is not None:
                obj["split"] = split
            fh.write(json.dumps(obj) + "\n")
    return len(examples)


@pytest.fixture
def train_dataset(tmp_path):
    path = tmp_path / "train.jsonl"
    n = build_jsonl(path, 20, split="train")
    assert n == 20
    return path


@pytest.fixture(scope="session")
def smoke_dataset(tmp_path_factory):
    path = tmp_path_factory.mktemp("smoke") / "smoke.jsonl"
    build_jsonl(path, 100, split="train")
    return path
