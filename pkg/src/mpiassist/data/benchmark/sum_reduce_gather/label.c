#include <mpi.h>
#include <stdio.h>
int main(int argc, char **argv)
{
    int rank;
    int size;
    MPI_Init(&argc, &argv);
    MPI_Comm_rank(MPI_COMM_WORLD, &rank);
    MPI_Comm_size(MPI_COMM_WORLD, &size);
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
        printf("%.6f %.6f\n", total, gsum);
    }
    MPI_Finalize();
    return 0;
}
