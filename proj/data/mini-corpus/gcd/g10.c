#include <stdio.h>

int main() {
    int t;
    scanf("%d", &t);
    while (t--) {
        int x, y;
        scanf("%d %d", &x, &y);
        do {
            int m = x % y;
            x = y;
            y = m;
        } while (y != 0);
        printf("%d\n", x);
    }
    return 0;
}
