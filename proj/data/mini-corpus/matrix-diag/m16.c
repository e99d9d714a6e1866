#include <stdio.h>

int main() {
    int n, mat[20][20], sum = 0;
    scanf("%d", &n);
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++)
            scanf("%d", &mat[i][j]);
    int k = 0;
    while (k < n) {
        sum += mat[k][k];
        k++;
    }
    printf("%d\n", sum);
    return 0;
}
