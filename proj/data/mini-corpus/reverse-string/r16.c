#include <stdio.h>
#include <string.h>

int main() {
    char s[75];
    scanf("%s", s);
    int lo = 0, hi = strlen(s) - 1;
    while (lo < hi) {
        char c = s[lo];
        s[lo] = s[hi];
        s[hi] = c;
        lo = lo + 1;
        hi = hi - 1;
    }
    printf("%s\n", s);
    return 0;
}
