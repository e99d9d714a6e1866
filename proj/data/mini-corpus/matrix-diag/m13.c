#include <stdio.h>

int main() {
    int dim, m[18][18], trace = 0;
    scanf("%d", &dim);
    for (int i = 0; i < dim; i++)
        for (int j = 0; j < dim; j++) {
            scanf("%d", &m[i][j]);
            if (i == j)
                trace = trace + m[i][j];
        }
    printf("%d\n", trace);
    return 0;
}
