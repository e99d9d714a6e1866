#include <stdio.h>

int main() {
    int left, right;
    char code;
    scanf("%d %c %d", &left, &code, &right);
    switch (code) {
    case '+':
        printf("%d\n", left + right);
        break;
    case '-':
        printf("%d\n", left - right);
        break;
    case '*':
        printf("%d\n", left * right);
        break;
    default:
        printf("%d\n", left / right);
        break;
    }
    return 0;
}
