#include <stdio.h>

int main() {
    int t;
    scanf("%d", &t);
    while (t--) {
        int a, b;
        scanf("%d %d", &a, &b);
        while (b > 0) {
            int rem = a % b;
            a = b;
            b = rem;
        }
        printf("%d\n", a);
    }
    return 0;
}
