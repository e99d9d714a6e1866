#include <stdio.h>

int shared = 0;

int find_gcd(int a, int b) {
    while (b) {
        int hold = a % b;
        a = b;
        b = hold;
    }
    shared = a;
    return shared;
}

int main() {
    int t, i, j;
    scanf("%d", &t);
    while (t > 0) {
        scanf("%d %d", &i, &j);
        printf("%d\n", find_gcd(i, j));
        t--;
    }
    return 0;
}
