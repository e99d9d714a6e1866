#include <stdio.h>
#include <string.h>

char input[99];

void swap_ends(int a, int b) {
    char t = input[a];
    input[a] = input[b];
    input[b] = t;
}

int main() {
    scanf("%s", input);
    int n = strlen(input);
    for (int i = 0; i < n / 2; i++)
        swap_ends(i, n - 1 - i);
    printf("%s\n", input);
    return 0;
}
