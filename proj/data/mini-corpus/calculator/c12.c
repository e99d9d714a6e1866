#include <stdio.h>

int main() {
    int a, b, value;
    char op;
    scanf("%d %c %d", &a, &op, &b);
    value = 0;
    switch (op) {
    case '+':
        value = a + b;
        break;
    case '-':
        value = a - b;
        break;
    case '*':
        value = a * b;
        break;
    case '/':
        value = a / b;
        break;
    }
    printf("%d\n", value);
    return 0;
}
