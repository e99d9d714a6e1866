#include <stdio.h>

int main() {
    int n, total = 0;
    scanf("%d", &n);
    int rows[22][22];
    for (int i = 0; i < n; i = i + 1) {
        for (int j = 0; j < n; j = j + 1) {
            scanf("%d", &rows[i][j]);
            if (i == j)
                total += rows[i][j];
        }
    }
    printf("%d\n", total);
    return 0;
}
