#include <stdio.h>

int divisor(int p, int q) {
    while (q != 0) {
        int keep = p % q;
        p = q;
        q = keep;
    }
    return p;
}

int main() {
    int rounds;
    scanf("%d", &rounds);
    while (rounds > 0) {
        int p, q;
        scanf("%d %d", &p, &q);
        printf("%d\n", divisor(p, q));
        rounds--;
    }
    return 0;
}
