#include <stdio.h>
int main(int argc, char **argv)
{
    double a[64];
    double total;
    int i;
    total = 0.0;
    for (i = 0; i < 64; i = i + 1)
    {
        a[i] = (double) i;
    }
    for (i = 0; i < 64; i = i + 1)
    {
        total = total + a[i];
    }
    printf("%.6f\n", total / 64.0);
    return 0;
}
