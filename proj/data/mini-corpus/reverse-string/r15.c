#include <stdio.h>
#include <string.h>

void reverse(char s[], int n) {
    for (int i = 0; i < n / 2; i++) {
        char t = s[i];
        s[i] = s[n - 1 - i];
        s[n - 1 - i] = t;
    }
}

int main() {
    char buf[90];
    scanf("%s", buf);
    reverse(buf, strlen(buf));
    printf("%s\n", buf);
    return 0;
}
