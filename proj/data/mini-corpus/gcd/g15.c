#include <stdio.h>

int walk(int hi, int lo) {
    if (lo == 0)
        return hi;
    return walk(lo, hi % lo);
}

int main() {
    int t;
    scanf("%d", &t);
    for (int i = 0; i < t; i++) {
        int first, second;
        scanf("%d %d", &first, &second);
        int g = walk(first, second);
        printf("%d\n", g);
    }
    return 0;
}
