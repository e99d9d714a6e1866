#include <stdio.h>
#include <string.h>

int main() {
    char s[128];
    scanf("%s", s);
    int n = strlen(s);
    for (int i = 0; i < n / 2; i++) {
        char tmp = s[i];
        s[i] = s[n - 1 - i];
        s[n - 1 - i] = tmp;
    }
    printf("%s\n", s);
    return 0;
}
