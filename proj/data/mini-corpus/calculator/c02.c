#include <stdio.h>

int main() {
    int x, y;
    char sign;
    scanf("%d %c %d", &x, &sign, &y);
    switch (sign) {
    case '+':
        printf("%d\n", x + y);
        break;
    case '-':
        printf("%d\n", x - y);
        break;
    case '*':
        printf("%d\n", x * y);
        break;
    case '/':
        printf("%d\n", x / y);
        break;
    default:
        printf("error\n");
        break;
    }
    return 0;
}
