#include <mpi.h>
#include <stdio.h>
int main(int argc, char **argv)
{
    int rank;
    int size;
    MPI_Init(&argc, &argv);
    MPI_Comm_rank(MPI_COMM_WORLD, &rank);
    MPI_Comm_size(MPI_COMM_WORLD, &size);
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
        u = (unsigned int)(i + 1);
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
        printf("%.6f\n", 4.0 * (double) total / 65536.0);
    }
    MPI_Finalize();
    return 0;
}
