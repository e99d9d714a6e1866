#include <stdio.h>

int main() {
    int count;
    scanf("%d", &count);
    for (int c = 0; c < count; c++) {
        int big, small;
        scanf("%d %d", &big, &small);
        while (small != 0) {
            int left = big % small;
            big = small;
            small = left;
        }
        printf("%d\n", big);
    }
    return 0;
}
