#include <stdio.h>

int main() {
    int t, m, n, r;
    scanf("%d", &t);
    for (int i = 0; i < t; i++) {
        scanf("%d %d", &m, &n);
        while (n != 0) {
            r = m % n;
            m = n;
            n = r;
        }
        printf("%d\n", m);
    }
    return 0;
}
