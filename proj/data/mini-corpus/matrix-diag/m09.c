#include <stdio.h>

int main() {
    int n, rows[22][22], answer = 0;
    scanf("%d", &n);
    for (int row = 0; row < n; row++) {
        for (int col = 0; col < n; col++) {
            scanf("%d", &rows[row][col]);
            if (row == col)
                answer += rows[row][col];
        }
    }
    printf("%d\n", answer);
    return 0;
}
