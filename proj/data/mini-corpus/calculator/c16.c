#include <stdio.h>

int main() {
    int x, y;
    char kind;
    scanf("%d %c %d", &x, &kind, &y);
    if (kind == '+')
        printf("%d\n", x + y);
    else if (kind == '-')
        printf("%d\n", x - y);
    else if (kind == '*')
        printf("%d\n", x * y);
    else
        printf("%d\n", x / y);
    return 0;
}
