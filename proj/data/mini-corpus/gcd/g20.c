#include <stdio.h>

int main() {
    int t;
    scanf("%d", &t);
    while (t > 0) {
        int a, b;
        scanf("%d %d", &a, &b);
        for (;;) {
            if (b == 0)
                break;
            int r = a % b;
            a = b;
            b = r;
        }
        printf("%d\n", a);
        t--;
    }
    return 0;
}
