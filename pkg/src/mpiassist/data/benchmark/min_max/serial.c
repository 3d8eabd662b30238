#include <stdio.h>
int main(int argc, char **argv)
{
    int a[64];
    int gmin;
    int gmax;
    int i;
    gmin = 1000000;
    gmax = -1000000;
    for (i = 0; i < 64; i = i + 1)
    {
        a[i] = (i * 37) % 101;
    }
    for (i = 0; i < 64; i = i + 1)
    {
        if (a[i] < gmin)
        {
            gmin = a[i];
        }
        if (a[i] > gmax)
        {
            gmax = a[i];
        }
    }
    printf("%d %d\n", gmin, gmax);
    return 0;
}
