#include <stdio.h>

int main() {
    int num1, num2;
    char symbol;
    scanf("%d %c %d", &num1, &symbol, &num2);
    switch (symbol) {
    case '+':
        printf("%d\n", num1 + num2);
        break;
    case '-':
        printf("%d\n", num1 - num2);
        break;
    case '*':
        printf("%d\n", num1 * num2);
        break;
    case '/':
        printf("%d\n", num1 / num2);
        break;
    }
    return 0;
}
