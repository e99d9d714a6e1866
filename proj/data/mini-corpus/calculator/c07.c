#include <stdio.h>

void compute(int a, char op, int b) {
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
    case '/':
        printf("%d\n", a / b);
        break;
    }
}

int main() {
    int m, n;
    char op;
    scanf("%d %c %d", &m, &op, &n);
    compute(m, op, n);
    return 0;
}
