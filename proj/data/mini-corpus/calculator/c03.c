#include <stdio.h>

int apply(int a, char op, int b) {
    switch (op) {
    case '+':
        return a + b;
    case '-':
        return a - b;
    case '*':
        return a * b;
    case '/':
        return a / b;
    }
    return 0;
}

int main() {
    int a, b;
    char op;
    scanf("%d %c %d", &a, &op, &b);
    printf("%d\n", apply(a, op, b));
    return 0;
}
