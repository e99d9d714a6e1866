#include <stdio.h>

int m[64][64];

int main() {
    int n, sum = 0;
    scanf("%d", &n);
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++)
            scanf("%d", &m[i][j]);
    int i = 0;
    while (i < n) {
        sum = sum + m[i][i];
        i = i + 1;
    }
    printf("%d\n", sum);
    return 0;
}
