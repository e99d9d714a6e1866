#include <stdio.h>
#include <string.h>

char scratch[160];

int main() {
    scanf("%s", scratch);
    int n = strlen(scratch);
    for (int i = 0, j = n - 1; i < j; i++, j--) {
        char tmp = scratch[i];
        scratch[i] = scratch[j];
        scratch[j] = tmp;
    }
    printf("%s\n", scratch);
    return 0;
}
