#include <stdio.h>

int total;

int main() {
    int t, a, b;
    scanf("%d", &t);
    while (t != 0) {
        scanf("%d %d", &a, &b);
        while (b != 0) {
            total = a % b;
            a = b;
            b = total;
        }
        printf("%d\n", a);
        t = t - 1;
    }
    return 0;
}
