#include <mpi.h>
#include <stdio.h>
int main(int argc, char **argv)
{
    int rank;
    int size;
    MPI_Init(&argc, &argv);
    MPI_Comm_rank(MPI_COMM_WORLD, &rank);
    MPI_Comm_size(MPI_COMM_WORLD, &size);
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
        printf("%.6f\n", dot);
    }
    MPI_Finalize();
    return 0;
}
