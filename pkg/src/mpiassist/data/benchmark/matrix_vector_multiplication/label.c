#include <mpi.h>
#include <stdio.h>
int main(int argc, char **argv)
{
    int rank;
    int size;
    MPI_Init(&argc, &argv);
    MPI_Comm_rank(MPI_COMM_WORLD, &rank);
    MPI_Comm_size(MPI_COMM_WORLD, &size);
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
        printf("%d\n", s);
    }
    MPI_Finalize();
    return 0;
}
