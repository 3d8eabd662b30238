#include <stdio.h>
int main(int argc, char **argv)
{
    long long a;
    long long b;
    long long t;
    int i;
    a = 0;
    b = 1;
    for (i = 0; i < 30; i = i + 1)
    {
        t = a + b;
        a = b;
        b = t;
    }
    printf("%lld\n", a);
    return 0;
}
