#include <stdio.h>
#include <string.h>

char buf[200];

int main() {
    scanf("%s", buf);
    int len = strlen(buf);
    int i = 0, j = len - 1;
    while (i < j) {
        char c = buf[i];
        buf[i] = buf[j];
        buf[j] = c;
        i++;
        j--;
    }
    printf("%s\n", buf);
    return 0;
}
