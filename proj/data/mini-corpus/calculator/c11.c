#include <stdio.h>

int main() {
    int first, second;
    char action;
    scanf("%d %c %d", &first, &action, &second);
    switch (action) {
    case '+':
        printf("%d\n", first + second);
        break;
    case '-':
        printf("%d\n", first - second);
        break;
    case '*':
        printf("%d\n", first * second);
        break;
    default:
        printf("%d\n", first / second);
        break;
    }
    return 0;
}
