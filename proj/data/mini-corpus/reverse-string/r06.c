#include <stdio.h>

int main() {
    char line[150];
    scanf("%s", line);
    int n = 0;
    while (line[n] != '\0')
        n++;
    for (int i = 0; i < n / 2; i++) {
        char keep = line[i];
        line[i] = line[n - 1 - i];
        line[n - 1 - i] = keep;
    }
    printf("%s\n", line);
    return 0;
}
