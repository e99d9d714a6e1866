#include <stdio.h>

int main() {
    int n, a[10][10], t = 0;
    scanf("%d", &n);
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++) {
            scanf("%d", &a[i][j]);
            if (i == j)
                t += a[i][j];
        }
    printf("%d\n", t);
    return 0;
}
