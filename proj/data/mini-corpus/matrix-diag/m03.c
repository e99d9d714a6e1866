#include <stdio.h>

int main() {
    int n, a[30][30], trace = 0;
    scanf("%d", &n);
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++) {
            scanf("%d", &a[i][j]);
            if (i == j)
                trace += a[i][j];
        }
    printf("%d\n", trace);
    return 0;
}
