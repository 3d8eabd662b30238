#include <stdio.h>
int main(int argc, char **argv)
{
    double total;
    int i;
    total = 0.0;
    for (i = 0; i < 64; i = i + 1)
    {
        total = total + (double) i;
    }
    printf("%.6f %.6f\n", total, total);
    return 0;
}
