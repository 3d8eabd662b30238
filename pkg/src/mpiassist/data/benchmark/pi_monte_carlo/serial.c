#include <stdio.h>
int main(int argc, char **argv)
{
    long long inside;
    unsigned int u;
    unsigned int v;
    double x;
    double y;
    int i;
    inside = 0;
    for (i = 0; i < 65536; i = i + 1)
    {
        u = (unsigned int)(i + 1);
        u = u * 1103515245 + 12345;
        v = u * 69069 + 5;
        x = (double) u / 4294967296.0;
        y = (double) v / 4294967296.0;
        if (x * x + y * y <= 1.0)
        {
            inside = inside + 1;
        }
    }
    printf("%.6f\n", 4.0 * (double) inside / 65536.0);
    return 0;
}
