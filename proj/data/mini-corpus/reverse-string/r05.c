#include <stdio.h>
#include <string.h>

void flip(char* s) {
    int n = strlen(s);
    for (int i = 0; i < n / 2; i++) {
        char t = s[i];
        s[i] = s[n - 1 - i];
        s[n - 1 - i] = t;
    }
}

int main() {
    char text[100];
    scanf("%s", text);
    flip(text);
    printf("%s\n", text);
    return 0;
}
