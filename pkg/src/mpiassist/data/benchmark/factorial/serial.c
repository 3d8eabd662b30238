#include <stdio.h>
int main(int argc, char **argv)
{
    long long total;
    int i;
    total = 1;
    for (i = 1; i <= 15; i = i + 1)
    {
        total = total * i;
    }
    printf("%lld\n", total);
    return 0;
}
