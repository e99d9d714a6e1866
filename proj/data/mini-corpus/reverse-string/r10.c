#include <stdio.h>
#include <string.h>

int main() {
    char s[256];
    scanf("%s", s);
    int n = strlen(s);
    for (int i = 0; i < n / 2; i++) {
        char hold = s[i];
        s[i] = s[n - i - 1];
        s[n - i - 1] = hold;
    }
    printf("%s\n", s);
    return 0;
}
