#include <stdio.h>

int gcd(int a, int b) {
    return b == 0 ? a : gcd(b, a % b);
}

int main() {
    int t;
    scanf("%d", &t);
    for (int i = 0; i < t; i++) {
        int u, v;
        scanf("%d %d", &u, &v);
        printf("%d\n", gcd(u, v));
    }
    return 0;
}
