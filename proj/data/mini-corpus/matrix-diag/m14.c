#include <stdio.h>

int fill_and_trace(int m[18][18], int n) {
    int s = 0;
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++) {
            scanf("%d", &m[i][j]);
            if (i == j)
                s += m[i][j];
        }
    return s;
}

int main() {
    int n, m[18][18];
    scanf("%d", &n);
    printf("%d\n", fill_and_trace(m, n));
    return 0;
}
