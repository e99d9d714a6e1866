#include <stdio.h>

int main() {
    int n, m[20][20], sum = 0;
    scanf("%d", &n);
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++)
            scanf("%d", &m[i][j]);
    for (int k = 0; k < n; k++)
        sum += m[k][k];
    printf("%d\n", sum);
    return 0;
}
