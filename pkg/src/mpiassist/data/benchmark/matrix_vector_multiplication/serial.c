#include <stdio.h>
int main(int argc, char **argv)
{
    int a[8][8];
    int x[8];
    int y[8];
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
    for (i = 0; i < 8; i = i + 1)
    {
        s = 0;
        for (j = 0; j < 8; j = j + 1)
        {
            s = s + a[i][j] * x[j];
        }
        y[i] = s;
    }
    s = 0;
    for (i = 0; i < 8; i = i + 1)
    {
        s = s + y[i];
    }
    printf("%d\n", s);
    return 0;
}
