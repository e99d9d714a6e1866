#include <stdio.h>
#include <string.h>

int main() {
    char word[128];
    scanf("%s", word);
    int n = strlen(word);
    for (int i = 0; i < n / 2; i++) {
        char tmp = word[i];
        word[i] = word[n - 1 - i];
        word[n - 1 - i] = tmp;
    }
    printf("%s\n", word);
    return 0;
}
