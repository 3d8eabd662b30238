#include <mpi.h>
#include <stdio.h>
int main(int argc, char **argv)
{
    int rank;
    int size;
    MPI_Init(&argc, &argv);
    MPI_Comm_rank(MPI_COMM_WORLD, &rank);
    MPI_Comm_size(MPI_COMM_WORLD, &size);
    int a[16];
    int i;
    int j;
    int key;
    for (i = 0; i < 16; i = i + 1)
    {
        a[i] = (i * 29 + 7) % 41;
    }
    MPI_Bcast(a, 16, MPI_INT, 0, MPI_COMM_WORLD);
    for (i = 1; i < 16; i = i + 1)
    {
        key = a[i];
        j = i - 1;
        while (j >= 0 && a[j] > key)
        {
            a[j + 1] = a[j];
            j = j - 1;
        }
        a[j + 1] = key;
    }
    if (rank == 0)
    {
        for (i = 0; i < 16; i = i + 1)
        {
            printf("%d ", a[i]);
        }
        printf("\n");
    }
    MPI_Finalize();
    return 0;
}
