#include <stdio.h>
int main(int argc, char **argv)
{
    double h;
    double result;
    double x;
    int i;
    h = 1.0 / 4096.0;
    result = 0.0;
    for (i = 0; i < 4096; i = i + 1)
    {
        x = ((double) i + 0.5) * h;
        result = result + 4.0 / (1.0 + x * x);
    }
    printf("%.6f\n", result * h);
    return 0;
}
