#include <stdio.h>

int cells[32][32];
int order;

int diagonal() {
    int s = 0;
    for (int i = 0; i < order; i++)
        s += cells[i][i];
    return s;
}

int main() {
    scanf("%d", &order);
    for (int i = 0; i < order; i++)
        for (int j = 0; j < order; j++)
            scanf("%d", &cells[i][j]);
    printf("%d\n", diagonal());
    return 0;
}
