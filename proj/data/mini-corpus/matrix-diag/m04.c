#include <stdio.h>

int main() {
    int size, table[25][25], diag = 0;
    scanf("%d", &size);
    int i = 0;
    while (i < size) {
        int j = 0;
        while (j < size) {
            scanf("%d", &table[i][j]);
            if (i == j)
                diag += table[i][j];
            j++;
        }
        i++;
    }
    printf("%d\n", diag);
    return 0;
}
