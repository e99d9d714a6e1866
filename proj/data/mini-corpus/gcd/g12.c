#include <stdio.h>

int main() {
    int t, n1, n2;
    scanf("%d", &t);
    for (int k = 0; k < t; k++) {
        scanf("%d %d", &n1, &n2);
        int r = n1 % n2;
        while (r != 0) {
            n1 = n2;
            n2 = r;
            r = n1 % n2;
        }
        printf("%d\n", n2);
    }
    return 0;
}
