#include <stdio.h>

int data[28][28];

void fill(int n) {
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++)
            scanf("%d", &data[i][j]);
}

int main() {
    int n, s = 0;
    scanf("%d", &n);
    fill(n);
    for (int i = 0; i < n; i++)
        s += data[i][i];
    printf("%d\n", s);
    return 0;
}
