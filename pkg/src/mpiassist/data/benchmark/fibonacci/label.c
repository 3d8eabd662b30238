#include <mpi.h>
#include <stdio.h>
int main(int argc, char **argv)
{
    int rank;
    int size;
    MPI_Init(&argc, &argv);
    MPI_Comm_rank(MPI_COMM_WORLD, &rank);
    MPI_Comm_size(MPI_COMM_WORLD, &size);
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
        printf("%lld\n", result);
    }
    MPI_Finalize();
    return 0;
}
