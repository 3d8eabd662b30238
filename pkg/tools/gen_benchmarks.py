"""One-off generator for the benchmark corpus under src/mpiassist/data/benchmark.

Writes each program in standardized form and prints the expected numeric
outputs (computed here in exact/float arithmetic) for pinning in bench.py.
"""
import pathlib
import sys

sys.path.insert(0, "src")

from mpiassist import corpus, cst, mpiedit

OUT = pathlib.Path("src/mpiassist/data/benchmark")

HEADER = """\
#include <mpi.h>
#include <stdio.h>
int main(int argc, char **argv)
{
    int rank;
    int size;
    MPI_Init(&argc, &argv);
    MPI_Comm_rank(MPI_COMM_WORLD, &rank);
    MPI_Comm_size(MPI_COMM_WORLD, &size);
"""

SERIAL_HEADER = """\
#include <stdio.h>
int main(int argc, char **argv)
{
"""

FOOTER = """\
    MPI_Finalize();
    return 0;
}
"""

SERIAL_FOOTER = """\
    return 0;
}
"""


def label(body):
    return HEADER + body + FOOTER


def serial(body):
    return SERIAL_HEADER + body + SERIAL_FOOTER


PROGRAMS = {}

PROGRAMS["array_average"] = (
    label("""\
    double a[64];
    double local;
    double total;
    int i;
    local = 0.0;
    total = 0.0;
    for (i = 0; i < 64; i = i + 1)
    {
        a[i] = (double) i;
    }
    for (i = rank; i < 64; i = i + size)
    {
        local = local + a[i];
    }
    MPI_Reduce(&local, &total, 1, MPI_DOUBLE, MPI_SUM, 0, MPI_COMM_WORLD);
    if (rank == 0)
    {
        printf("%.6f\\n", total / 64.0);
    }
"""),
    serial("""\
    double a[64];
    double total;
    int i;
    total = 0.0;
    for (i = 0; i < 64; i = i + 1)
    {
        a[i] = (double) i;
    }
    for (i = 0; i < 64; i = i + 1)
    {
        total = total + a[i];
    }
    printf("%.6f\\n", total / 64.0);
"""),
)

PROGRAMS["vector_dot_product"] = (
    label("""\
    double a[64];
    double b[64];
    double local;
    double dot;
    int i;
    local = 0.0;
    dot = 0.0;
    for (i = 0; i < 64; i = i + 1)
    {
        a[i] = (double) i;
        b[i] = 2.0 * (double) i;
    }
    for (i = rank; i < 64; i = i + size)
    {
        local = local + a[i] * b[i];
    }
    MPI_Reduce(&local, &dot, 1, MPI_DOUBLE, MPI_SUM, 0, MPI_COMM_WORLD);
    if (rank == 0)
    {
        printf("%.6f\\n", dot);
    }
"""),
    serial("""\
    double a[64];
    double b[64];
    double dot;
    int i;
    dot = 0.0;
    for (i = 0; i < 64; i = i + 1)
    {
        a[i] = (double) i;
        b[i] = 2.0 * (double) i;
    }
    for (i = 0; i < 64; i = i + 1)
    {
        dot = dot + a[i] * b[i];
    }
    printf("%.6f\\n", dot);
"""),
)

PROGRAMS["min_max"] = (
    label("""\
    int a[64];
    int lmin;
    int lmax;
    int gmin;
    int gmax;
    int i;
    lmin = 1000000;
    lmax = -1000000;
    for (i = 0; i < 64; i = i + 1)
    {
        a[i] = (i * 37) % 101;
    }
    for (i = rank; i < 64; i = i + size)
    {
        if (a[i] < lmin)
        {
            lmin = a[i];
        }
        if (a[i] > lmax)
        {
            lmax = a[i];
        }
    }
    MPI_Reduce(&lmin, &gmin, 1, MPI_INT, MPI_MIN, 0, MPI_COMM_WORLD);
    MPI_Reduce(&lmax, &gmax, 1, MPI_INT, MPI_MAX, 0, MPI_COMM_WORLD);
    if (rank == 0)
    {
        printf("%d %d\\n", gmin, gmax);
    }
"""),
    serial("""\
    int a[64];
    int gmin;
    int gmax;
    int i;
    gmin = 1000000;
    gmax = -1000000;
    for (i = 0; i < 64; i = i + 1)
    {
        a[i] = (i * 37) % 101;
    }
    for (i = 0; i < 64; i = i + 1)
    {
        if (a[i] < gmin)
        {
            gmin = a[i];
        }
        if (a[i] > gmax)
        {
            gmax = a[i];
        }
    }
    printf("%d %d\\n", gmin, gmax);
"""),
)

PROGRAMS["matrix_vector_multiplication"] = (
    label("""\
    int a[8][8];
    int x[8];
    int y[8];
    int yg[8];
    int i;
    int j;
    int s;
    for (i = 0; i < 8; i = i + 1)
    {
        x[i] = 1;
        y[i] = 0;
        for (j = 0; j < 8; j = j + 1)
        {
            a[i][j] = i + j;
        }
    }
    for (i = rank; i < 8; i = i + size)
    {
        s = 0;
        for (j = 0; j < 8; j = j + 1)
        {
            s = s + a[i][j] * x[j];
        }
        y[i] = s;
    }
    MPI_Reduce(y, yg, 8, MPI_INT, MPI_SUM, 0, MPI_COMM_WORLD);
    if (rank == 0)
    {
        s = 0;
        for (i = 0; i < 8; i = i + 1)
        {
            s = s + yg[i];
        }
        printf("%d\\n", s);
    }
"""),
    serial("""\
    int a[8][8];
    int x[8];
    int y[8];
    int i;
    int j;
    int s;
    for (i = 0; i < 8; i = i + 1)
    {
        x[i] = 1;
        y[i] = 0;
        for (j = 0; j < 8; j = j + 1)
        {
            a[i][j] = i + j;
        }
    }
    for (i = 0; i < 8; i = i + 1)
    {
        s = 0;
        for (j = 0; j < 8; j = j + 1)
        {
            s = s + a[i][j] * x[j];
        }
        y[i] = s;
    }
    s = 0;
    for (i = 0; i < 8; i = i + 1)
    {
        s = s + y[i];
    }
    printf("%d\\n", s);
"""),
)

PROGRAMS["sum_reduce_gather"] = (
    label("""\
    double local;
    double total;
    double parts[8];
    double gsum;
    int i;
    local = 0.0;
    total = 0.0;
    for (i = rank; i < 64; i = i + size)
    {
        local = local + (double) i;
    }
    MPI_Reduce(&local, &total, 1, MPI_DOUBLE, MPI_SUM, 0, MPI_COMM_WORLD);
    MPI_Gather(&local, 1, MPI_DOUBLE, parts, 1, MPI_DOUBLE, 0, MPI_COMM_WORLD);
    if (rank == 0)
    {
        gsum = 0.0;
        for (i = 0; i < size; i = i + 1)
        {
            gsum = gsum + parts[i];
        }
        printf("%.6f %.6f\\n", total, gsum);
    }
"""),
    serial("""\
    double total;
    int i;
    total = 0.0;
    for (i = 0; i < 64; i = i + 1)
    {
        total = total + (double) i;
    }
    printf("%.6f %.6f\\n", total, total);
"""),
)

PROGRAMS["merge_sort"] = (
    label("""\
    int a[16];
    int i;
    int j;
    int key;
    for (i = 0; i < 16; i = i + 1)
    {
        a[i] = (i * 29 + 7) % 41;
    }
    MPI_Bcast(a, 16, MPI_INT, 0, MPI_COMM_WORLD);
    for (i = 1; i < 16; i = i + 1)
    {
        key = a[i];
        j = i - 1;
        while (j >= 0 && a[j] > key)
        {
            a[j + 1] = a[j];
            j = j - 1;
        }
        a[j + 1] = key;
    }
    if (rank == 0)
    {
        for (i = 0; i < 16; i = i + 1)
        {
            printf("%d ", a[i]);
        }
        printf("\\n");
    }
"""),
    serial("""\
    int a[16];
    int i;
    int j;
    int key;
    for (i = 0; i < 16; i = i + 1)
    {
        a[i] = (i * 29 + 7) % 41;
    }
    for (i = 1; i < 16; i = i + 1)
    {
        key = a[i];
        j = i - 1;
        while (j >= 0 && a[j] > key)
        {
            a[j + 1] = a[j];
            j = j - 1;
        }
        a[j + 1] = key;
    }
    for (i = 0; i < 16; i = i + 1)
    {
        printf("%d ", a[i]);
    }
    printf("\\n");
"""),
)

PROGRAMS["pi_monte_carlo"] = (
    label("""\
    long long inside;
    long long total;
    unsigned int u;
    unsigned int v;
    double x;
    double y;
    int i;
    inside = 0;
    total = 0;
    for (i = rank; i < 65536; i = i + size)
    {
        u = (unsigned int) (i + 1);
        u = u * 1103515245 + 12345;
        v = u * 69069 + 5;
        x = (double) u / 4294967296.0;
        y = (double) v / 4294967296.0;
        if (x * x + y * y <= 1.0)
        {
            inside = inside + 1;
        }
    }
    MPI_Reduce(&inside, &total, 1, MPI_LONG_LONG, MPI_SUM, 0, MPI_COMM_WORLD);
    if (rank == 0)
    {
        printf("%.6f\\n", 4.0 * (double) total / 65536.0);
    }
"""),
    serial("""\
    long long inside;
    unsigned int u;
    unsigned int v;
    double x;
    double y;
    int i;
    inside = 0;
    for (i = 0; i < 65536; i = i + 1)
    {
        u = (unsigned int) (i + 1);
        u = u * 1103515245 + 12345;
        v = u * 69069 + 5;
        x = (double) u / 4294967296.0;
        y = (double) v / 4294967296.0;
        if (x * x + y * y <= 1.0)
        {
            inside = inside + 1;
        }
    }
    printf("%.6f\\n", 4.0 * (double) inside / 65536.0);
"""),
)

PROGRAMS["pi_riemann_sum"] = (
    label("""\
    double h;
    double local;
    double result;
    double x;
    int i;
    h = 1.0 / 4096.0;
    local = 0.0;
    result = 0.0;
    for (i = rank; i < 4096; i = i + size)
    {
        x = ((double) i + 0.5) * h;
        local = local + 4.0 / (1.0 + x * x);
    }
    MPI_Reduce(&local, &result, 1, MPI_DOUBLE, MPI_SUM, 0, MPI_COMM_WORLD);
    if (rank == 0)
    {
        printf("%.6f\\n", result * h);
    }
"""),
    serial("""\
    double h;
    double result;
    double x;
    int i;
    h = 1.0 / 4096.0;
    result = 0.0;
    for (i = 0; i < 4096; i = i + 1)
    {
        x = ((double) i + 0.5) * h;
        result = result + 4.0 / (1.0 + x * x);
    }
    printf("%.6f\\n", result * h);
"""),
)

PROGRAMS["factorial"] = (
    label("""\
    long long local;
    long long total;
    int i;
    local = 1;
    total = 1;
    for (i = rank + 1; i <= 15; i = i + size)
    {
        local = local * i;
    }
    MPI_Reduce(&local, &total, 1, MPI_LONG_LONG, MPI_PROD, 0, MPI_COMM_WORLD);
    if (rank == 0)
    {
        printf("%lld\\n", total);
    }
"""),
    serial("""\
    long long total;
    int i;
    total = 1;
    for (i = 1; i <= 15; i = i + 1)
    {
        total = total * i;
    }
    printf("%lld\\n", total);
"""),
)

PROGRAMS["fibonacci"] = (
    label("""\
    long long a;
    long long b;
    long long t;
    long long result;
    int i;
    a = 0;
    b = 1;
    result = 0;
    for (i = 0; i < 30; i = i + 1)
    {
        t = a + b;
        a = b;
        b = t;
    }
    MPI_Reduce(&a, &result, 1, MPI_LONG_LONG, MPI_MAX, 0, MPI_COMM_WORLD);
    if (rank == 0)
    {
        printf("%lld\\n", result);
    }
"""),
    serial("""\
    long long a;
    long long b;
    long long t;
    int i;
    a = 0;
    b = 1;
    for (i = 0; i < 30; i = i + 1)
    {
        t = a + b;
        a = b;
        b = t;
    }
    printf("%lld\\n", a);
"""),
)

PROGRAMS["trapezoidal_rule"] = (
    label("""\
    double h;
    double local;
    double total;
    double x;
    int i;
    h = 1.0 / 2048.0;
    local = 0.0;
    total = 0.0;
    for (i = rank + 1; i < 2048; i = i + size)
    {
        x = (double) i * h;
        local = local + x * x;
    }
    if (rank == 0)
    {
        local = local + 0.5 * (0.0 + 1.0);
    }
    MPI_Reduce(&local, &total, 1, MPI_DOUBLE, MPI_SUM, 0, MPI_COMM_WORLD);
    if (rank == 0)
    {
        printf("%.6f\\n", total * h);
    }
"""),
    serial("""\
    double h;
    double total;
    double x;
    int i;
    h = 1.0 / 2048.0;
    total = 0.5 * (0.0 + 1.0);
    for (i = 1; i < 2048; i = i + 1)
    {
        x = (double) i * h;
        total = total + x * x;
    }
    printf("%.6f\\n", total * h);
"""),
)


def expected_outputs():
    out = {}
    out["array_average"] = f"{sum(range(64)) / 64.0:.6f}"
    out["vector_dot_product"] = f"{sum(2.0 * i * i for i in range(64)):.6f}"
    vals = [(i * 37) % 101 for i in range(64)]
    out["min_max"] = f"{min(vals)} {max(vals)}"
    out["matrix_vector_multiplication"] = str(sum(8 * i + 28 for i in range(8)))
    total = sum(float(i) for i in range(64))
    out["sum_reduce_gather"] = f"{total:.6f} {total:.6f}"
    sorted_vals = sorted((i * 29 + 7) % 41 for i in range(16))
    out["merge_sort"] = " ".join(str(v) for v in sorted_vals)
    inside = 0
    for i in range(65536):
        u = ((i + 1) * 1103515245 + 12345) % 2**32
        v = (u * 69069 + 5) % 2**32
        x = u / 2**32
        y = v / 2**32
        if x * x + y * y <= 1.0:
            inside += 1
    out["pi_monte_carlo"] = f"{4.0 * inside / 65536.0:.6f}"
    h = 1.0 / 4096.0
    s = sum(4.0 / (1.0 + ((i + 0.5) * h) ** 2) for i in range(4096))
    out["pi_riemann_sum"] = f"{s * h:.6f}"
    fact = 1
    for i in range(1, 16):
        fact *= i
    out["factorial"] = str(fact)
    out["fibonacci"] = "832040"
    h = 1.0 / 2048.0
    s = 0.5 + sum((i * h) ** 2 for i in range(1, 2048))
    out["trapezoidal_rule"] = f"{s * h:.6f}"
    return out


def main():
    exp = expected_outputs()
    for name, (label_text, serial_text) in PROGRAMS.items():
        std_label = cst.standardize(label_text)
        std_serial = cst.standardize(serial_text)
        assert cst.standardize(std_label) == std_label, name
        unit = cst.SourceUnit(path=f"{name}.c", text=std_label)
        report, std_unit = corpus.admit(unit, corpus.CorpusConfig())
        assert report.verdict == "included", (name, report.reason)
        calls = mpiedit.find_mpi_calls(std_unit.ast)
        mids = len(calls) - 4
        assert 1 <= mids <= 3, (name, [c.name for c in calls])
        n_tok = cst.token_count(std_label)
        d = OUT / name
        d.mkdir(parents=True, exist_ok=True)
        (d / "label.c").write_text(std_label)
        (d / "serial.c").write_text(std_serial)
        print(f"{name}: tokens={n_tok} calls={len(calls)} expected={exp[name]!r}")


if __name__ == "__main__":
    main()
