#include <stdio.h>

int main() {
    int n, m[15][15], left = 0;
    scanf("%d", &n);
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++)
            scanf("%d", &m[i][j]);
    for (int i = 0; i < n; i++)
        left += m[i][i];
    printf("%d\n", left);
    return 0;
}
