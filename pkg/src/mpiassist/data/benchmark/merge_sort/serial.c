#include <stdio.h>
int main(int argc, char **argv)
{
    int a[16];
    int i;
    int j;
    int key;
    for (i = 0; i < 16; i = i + 1)
    {
        a[i] = (i * 29 + 7) % 41;
    }
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
    for (i = 0; i < 16; i = i + 1)
    {
        printf("%d ", a[i]);
    }
    printf("\n");
    return 0;
}
