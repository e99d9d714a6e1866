#include <stdio.h>

int read_cell() {
    int v;
    scanf("%d", &v);
    return v;
}

int main() {
    int n, m[16][16], trace = 0;
    scanf("%d", &n);
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++) {
            m[i][j] = read_cell();
            if (i == j)
                trace += m[i][j];
        }
    printf("%d\n", trace);
    return 0;
}
