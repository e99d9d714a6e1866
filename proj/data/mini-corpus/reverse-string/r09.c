#include <stdio.h>
#include <string.h>

int main() {
    char word[120];
    scanf("%s", word);
    int i = 0, j = strlen(word) - 1;
    while (i < j) {
        char tmp = word[i];
        word[i] = word[j];
        word[j] = tmp;
        i++;
        j--;
    }
    printf("%s\n", word);
    return 0;
}
