#include <stdio.h>

int add(int a, int b) {
    return a + b;
}

int main() {
    int a, b;
    char op;
    scanf("%d %c %d", &a, &op, &b);
    switch (op) {
    case '+':
        printf("%d\n", add(a, b));
        break;
    case '-':
        printf("%d\n", a - b);
        break;
    case '*':
        printf("%d\n", a * b);
        break;
    case '/':
        printf("%d\n", a / b);
        break;
    }
    return 0;
}
