#include <stdio.h>

int main() {
    int t, p, q;
    scanf("%d", &t);
    while (t--) {
        scanf("%d %d", &p, &q);
        int r = p % q;
        while (r) {
            p = q;
            q = r;
            r = p % q;
        }
        printf("%d\n", q);
    }
    return 0;
}
