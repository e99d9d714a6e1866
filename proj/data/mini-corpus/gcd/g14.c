#include <stdio.h>

int main() {
    int trials;
    scanf("%d", &trials);
    while (trials-- > 0) {
        int a, b, m;
        scanf("%d %d", &a, &b);
        while (b != 0) {
            m = a % b;
            a = b;
            b = m;
        }
        printf("%d\n", a);
    }
    return 0;
}
