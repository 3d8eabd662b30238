#include <mpi.h>
#include <stdio.h>
int main(int argc, char **argv)
{
    int rank;
    int size;
    MPI_Init(&argc, &argv);
    MPI_Comm_rank(MPI_COMM_WORLD, &rank);
    MPI_Comm_size(MPI_COMM_WORLD, &size);
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
        printf("%d %d\n", gmin, gmax);
    }
    MPI_Finalize();
    return 0;
}
