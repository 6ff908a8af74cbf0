#include <stdio.h>

int total;

int main() {
  int base = 3;
  int *p = &base;
  int k;
  for (k = 0; k < 3; k++) {
    int local = k * 2;
    int *q = &local;
    *q = *q + *p;
    total += *q;
  }
  {
    int inner = 7;
    p = &inner;
    total += *p;
  }
  p = &base;
  int v = *p;
  int w = total / (v + 1);
  printf("%d %d\n", total, w);
  return 0;
}
