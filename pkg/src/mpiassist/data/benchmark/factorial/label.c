#include <mpi.h>
#include <stdio.h>
int main(int argc, char **argv)
{
    int rank;
    int size;
    MPI_Init(&argc, &argv);
    MPI_Comm_rank(MPI_COMM_WORLD, &rank);
    MPI_Comm_size(MPI_COMM_WORLD, &size);
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
        printf("%lld\n", total);
    }
    MPI_Finalize();
    return 0;
}
