#include <stdio.h>
#include <string.h>

int main() {
    char src[140], dst[140];
    scanf("%s", src);
    int n = strlen(src);
    int k = 0;
    while (k < n) {
        dst[k] = src[n - 1 - k];
        k++;
    }
    dst[n] = '\0';
    printf("%s\n", dst);
    return 0;
}
