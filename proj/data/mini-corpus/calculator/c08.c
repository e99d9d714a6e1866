#include <stdio.h>

int main() {
    int p, q;
    char what;
    scanf("%d %c %d", &p, &what, &q);
    switch (what) {
    case '+':
        printf("%d\n", p + q);
        break;
    case '-':
        printf("%d\n", p - q);
        break;
    case '*':
        printf("%d\n", p * q);
        break;
    case '/':
        if (q != 0)
            printf("%d\n", p / q);
        break;
    }
    return 0;
}
