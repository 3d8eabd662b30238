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
        printf("%.6f\n", total / 64.0);
    }
    MPI_Finalize();
    return 0;
}
