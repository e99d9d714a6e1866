#include <stdio.h>

int main() {
    int lhs, rhs;
    char op;
    scanf("%d %c %d", &lhs, &op, &rhs);
    switch (op) {
    case '+':
        printf("%d\n", lhs + rhs);
        break;
    case '-':
        printf("%d\n", lhs - rhs);
        break;
    case '*':
        printf("%d\n", lhs * rhs);
        break;
    case '/':
        printf("%d\n", lhs / rhs);
        break;
    default:
        printf("bad input\n");
        break;
    }
    return 0;
}
