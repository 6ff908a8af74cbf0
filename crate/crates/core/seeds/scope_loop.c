#include <stdio.h>

int a, b;

int main() {
  int *s = &a;
  for (b = 0; b <= 3; b++) {
    int i = *s;
    s = &a;
    a = i + b;
  }
  *s = b;
  printf("%d %d\n", a, b);
  return 0;
}
