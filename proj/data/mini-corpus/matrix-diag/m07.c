#include <stdio.h>

int main() {
    int n, board[20][20], d = 0;
    scanf("%d", &n);
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++) {
            scanf("%d", &board[i][j]);
            if (i == j)
                d = d + board[i][j];
        }
    printf("%d\n", d);
    return 0;
}
