#include <stdio.h>
#include <string.h>

int main() {
    char word[80];
    scanf("%s", word);
    int size = strlen(word);
    int i = 0;
    while (i < size / 2) {
        char other = word[size - 1 - i];
        word[size - 1 - i] = word[i];
        word[i] = other;
        i++;
    }
    printf("%s\n", word);
    return 0;
}
