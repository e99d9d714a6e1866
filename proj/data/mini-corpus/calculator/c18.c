#include <stdio.h>

int main() {
    int n1, n2;
    char op;
    scanf("%d %c %d", &n1, &op, &n2);
    switch (op) {
    case '+':
        printf("%d\n", n1 + n2);
        break;
    case '-':
        printf("%d\n", n1 - n2);
        break;
    case '*':
        printf("%d\n", n1 * n2);
        break;
    case '/':
        if (n2 == 0)
            printf("error\n");
        else
            printf("%d\n", n1 / n2);
        break;
    }
    return 0;
}
