#include <stdio.h>

int answer;

void reduce(int a, int b) {
    while (b != 0) {
        int r = a % b;
        a = b;
        b = r;
    }
    answer = a;
}

int main() {
    int n;
    scanf("%d", &n);
    for (int i = 0; i < n; i++) {
        int a, b;
        scanf("%d %d", &a, &b);
        reduce(a, b);
        printf("%d\n", answer);
    }
    return 0;
}
