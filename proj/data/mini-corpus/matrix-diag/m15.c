#include <stdio.h>

int main() {
    int n, grid[12][12], result = 0;
    scanf("%d", &n);
    for (int i = 0; i < n; i++) {
        for (int j = 0; j < n; j++) {
            scanf("%d", &grid[i][j]);
            if (i == j)
                result = result + grid[i][j];
        }
    }
    printf("%d\n", result);
    return 0;
}
