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
        printf("%.6f\n", result * h);
    }
    MPI_Finalize();
    return 0;
}
