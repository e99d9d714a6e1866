#include <stdio.h>

int step(int a, int b) {
    return a % b;
}

int main() {
    int games;
    scanf("%d", &games);
    while (games > 0) {
        int a, b;
        scanf("%d %d", &a, &b);
        while (b != 0) {
            int next = step(a, b);
            a = b;
            b = next;
        }
        printf("%d\n", a);
        games--;
    }
    return 0;
}
