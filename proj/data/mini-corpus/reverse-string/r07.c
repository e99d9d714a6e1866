#include <stdio.h>
#include <string.h>

int main() {
    char a[120], b[120];
    scanf("%s", a);
    int n = strlen(a);
    for (int i = 0; i < n; i++)
        b[i] = a[n - 1 - i];
    b[n] = '\0';
    printf("%s\n", b);
    return 0;
}
