#include <stdio.h>

int main() {
    int t;
    scanf("%d", &t);
    while (t > 0) {
        int a, b;
        scanf("%d %d", &a, &b);
        while (b != 0) {
            int r = a % b;
            a = b;
            b = r;
        }
        printf("%d\n", a);
        t -= 1;
    }
    return 0;
}
