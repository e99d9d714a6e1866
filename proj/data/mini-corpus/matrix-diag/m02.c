#include <stdio.h>

int grid[50][50];

int main() {
    int n, total = 0;
    scanf("%d", &n);
    for (int r = 0; r < n; r++) {
        for (int c = 0; c < n; c++) {
            scanf("%d", &grid[r][c]);
            if (r == c)
                total = total + grid[r][c];
        }
    }
    printf("%d\n", total);
    return 0;
}
