#include <stdio.h>
#include <string.h>

int main() {
    char s[64];
    scanf("%s", s);
    int lo = 0, hi = strlen(s) - 1;
    for (; lo < hi; lo++, hi--) {
        char swap = s[lo];
        s[lo] = s[hi];
        s[hi] = swap;
    }
    printf("%s\n", s);
    return 0;
}
