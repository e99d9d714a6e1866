#include <stdio.h>
#include <string.h>

int main() {
    char line[85];
    scanf("%s", line);
    int n = strlen(line);
    for (int i = 0; i < n / 2; i++) {
        char t = line[i];
        line[i] = line[n - 1 - i];
        line[n - 1 - i] = t;
    }
    printf("%s\n", line);
    return 0;
}
