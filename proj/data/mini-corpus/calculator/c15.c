#include <stdio.h>

char op;

int main() {
    int a, b;
    scanf("%d %c %d", &a, &op, &b);
    switch (op) {
    case '+':
        printf("%d\n", a + b);
        break;
    case '-':
        printf("%d\n", a - b);
        break;
    case '*':
        printf("%d\n", a * b);
        break;
    case '%':
        printf("%d\n", a % b);
        break;
    default:
        printf("%d\n", a / b);
        break;
    }
    return 0;
}
