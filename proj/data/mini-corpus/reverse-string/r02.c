#include <stdio.h>
#include <string.h>

int main() {
    char s[256];
    scanf("%s", s);
    int left = 0, right = strlen(s) - 1;
    while (left < right) {
        char hold = s[left];
        s[left] = s[right];
        s[right] = hold;
        left++;
        right--;
    }
    printf("%s\n", s);
    return 0;
}
