#include <stdio.h>

int main() {
    int n, mat[40][40], acc = 0;
    scanf("%d", &n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            scanf("%d", &mat[i][j]);
            if (i == j)
                acc += mat[i][j];
        }
    }
    printf("%d\n", acc);
    return 0;
}
