#include <stdio.h>

int euclid(int a, int b) {
    if (a % b == 0)
        return b;
    return euclid(b, a % b);
}

int main() {
    int t;
    scanf("%d", &t);
    while (t > 0) {
        int a, b;
        scanf("%d %d", &a, &b);
        printf("%d\n", euclid(a, b));
        t = t - 1;
    }
    return 0;
}
