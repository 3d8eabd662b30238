"""Deterministic generator for synthetic MPI C fixture files.

Produces structurally varied programs that all pass admission: main with or
without argc/argv, padding declarations, loops, conditionals, and 1-6
statement-context MPI calls drawn from a mixed core/non-core pool.
"""
import random

CALL_POOL = [
    "MPI_Send(&v{n}, 1, MPI_INT, 1, 0, MPI_COMM_WORLD);",
    "MPI_Recv(&v{n}, 1, MPI_INT, 0, 0, MPI_COMM_WORLD, MPI_STATUS_IGNORE);",
    "MPI_Bcast(&v{n}, 1, MPI_INT, 0, MPI_COMM_WORLD);",
    "MPI_Reduce(&v{n}, &w{n}, 1, MPI_INT, MPI_SUM, 0, MPI_COMM_WORLD);",
    "MPI_Barrier(MPI_COMM_WORLD);",
    "MPI_Allreduce(&v{n}, &w{n}, 1, MPI_INT, MPI_SUM, MPI_COMM_WORLD);",
]


def make_fixture(index, rng):
    with_args = rng.random() < 0.7
    signature = "int main(int argc, char **argv)" if with_args else "int main()"
    init = (
        "MPI_Init(&argc, &argv);" if with_args else "MPI_Init(NULL, NULL);"
    )
    lines = ["#include <mpi.h>", signature, "{", "    int rank;", "    int size;"]
    for p in range(rng.randint(0, 4)):
        lines.append(f"    int v{p};")
        lines.append(f"    int w{p};")
    lines.append(f"    {init}")
    lines.append("    MPI_Comm_rank(MPI_COMM_WORLD, &rank);")
    lines.append("    MPI_Comm_size(MPI_COMM_WORLD, &size);")
    n_calls = rng.randint(1, 4)
    for c in range(n_calls):
        template = rng.choice(CALL_POOL)
        call = template.format(n=rng.randint(0, 3))
        if "v" in call or "w" in call:
            # ensure referenced vars exist
            lines.insert(5, f"    int v{c % 4}; int w{c % 4};")
            call = template.format(n=c % 4)
        style = rng.random()
        if style < 0.3:
            lines.append("    if (rank == 0)")
            lines.append("    {")
            lines.append(f"        {call}")
            lines.append("    }")
        elif style < 0.5:
            lines.append("    int i;" if "int i;" not in lines else "    i = 0;")
            lines.append("    for (i = 0; i < size; i = i + 1)")
            lines.append("    {")
            lines.append(f"        {call}")
            lines.append("    }")
        else:
            lines.append(f"    {call}")
    if rng.random() < 0.5:
        lines.append(f"    int tail{index % 7};")
    lines.append("    MPI_Finalize();")
    lines.append("    return 0;")
    lines.append("}")
    return "\n".join(lines) + "\n"


def generate_corpus(n=200, seed=1234):
    """Return [(filename, text)] for n synthetic fixture files."""
    rng = random.Random(seed)
    return [(f"fixture_{i:03d}.c", make_fixture(i, rng)) for i in range(n)]
