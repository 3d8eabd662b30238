#include <stdio.h>
int main(int argc, char **argv)
{
    double a[64];
    double b[64];
    double dot;
    int i;
    dot = 0.0;
    for (i = 0; i < 64; i = i + 1)
    {
        a[i] = (double) i;
        b[i] = 2.0 * (double) i;
    }
    for (i = 0; i < 64; i = i + 1)
    {
        dot = dot + a[i] * b[i];
    }
    printf("%.6f\n", dot);
    return 0;
}
