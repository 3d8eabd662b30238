#include <mpi.h>
#include <stdio.h>
int main(int argc, char **argv)
{
    int rank;
    int size;
    MPI_Init(&argc, &argv);
    MPI_Comm_rank(MPI_COMM_WORLD, &rank);
    MPI_Comm_size(MPI_COMM_WORLD, &size);
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
        printf("%.6f\n", total * h);
    }
    MPI_Finalize();
    return 0;
}
