#include <stdio.h>

int main() {
    int queries;
    scanf("%d", &queries);
    for (int q = 0; q < queries; q++) {
        int v1, v2;
        scanf("%d %d", &v1, &v2);
        while (v1 != v2) {
            if (v1 > v2)
                v1 = v1 - v2;
            else
                v2 = v2 - v1;
        }
        printf("%d\n", v1);
    }
    return 0;
}
