#include <stdio.h>
#include <string.h>

int main() {
    char text[130], out[130];
    scanf("%s", text);
    int n = strlen(text);
    for (int i = 0; i < n; i++)
        out[i] = text[n - 1 - i];
    out[n] = '\0';
    printf("%s\n", out);
    return 0;
}
