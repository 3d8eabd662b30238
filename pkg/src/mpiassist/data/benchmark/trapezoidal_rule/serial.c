#include <stdio.h>
int main(int argc, char **argv)
{
    double h;
    double total;
    double x;
    int i;
    h = 1.0 / 2048.0;
    total = 0.5 * (0.0 + 1.0);
    for (i = 1; i < 2048; i = i + 1)
    {
        x = (double) i * h;
        total = total + x * x;
    }
    printf("%.6f\n", total * h);
    return 0;
}
