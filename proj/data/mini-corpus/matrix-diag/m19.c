#include <stdio.h>

int main() {
    int n, m[12][12], d = 0;
    scanf("%d", &n);
    for (int i = 0; i < n; i++) {
        for (int j = 0; j < n; j++) {
            scanf("%d", &m[i][j]);
            if (i == j)
                d += m[i][j];
        }
    }
    printf("%d\n", d);
    return 0;
}
