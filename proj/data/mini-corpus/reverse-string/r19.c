#include <stdio.h>
#include <string.h>

int main() {
    char s[110];
    scanf("%s", s);
    int n = strlen(s);
    int i = 0;
    do {
        char t = s[i];
        s[i] = s[n - 1 - i];
        s[n - 1 - i] = t;
        i++;
    } while (i < n / 2);
    printf("%s\n", s);
    return 0;
}
