#include <stdio.h>
#include <stdlib.h>

int length(char *s) {
  int n = 0;
  while (s[n]) {
    n++;
  }
  return n;
}

void reverse(char *s, int n) {
  int i;
  for (i = 0; i < n / 2; i++) {
    char t = s[i];
    s[i] = s[n - 1 - i];
    s[n - 1 - i] = t;
  }
}

int main() {
  char word[8];
  int i;
  for (i = 0; i < 7; i++) {
    word[i] = 'a' + i;
  }
  word[7] = 0;
  int n = length(word);
  reverse(word, n);
  char *copy = malloc(n + 1);
  char *src = word;
  char *dst = copy;
  while (*src) {
    *dst = *src;
    dst++;
    src++;
  }
  *dst = 0;
  printf("%s %d %c\n", copy, n, copy[2]);
  free(copy);
  return 0;
}
