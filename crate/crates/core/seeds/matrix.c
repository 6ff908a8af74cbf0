#include <stdio.h>

int m[4][4];
int out[4];

int main() {
  int i;
  int j;
  for (i = 0; i < 4; i++) {
    for (j = 0; j < 4; j++) {
      m[i][j] = i * 4 + j;
    }
  }
  int *row = m[2];
  for (i = 0; i < 4; i++) {
    int acc = 0;
    for (j = 0; j < 4; j++) {
      acc += m[i][j] * (j + 1);
    }
    out[i] = acc;
  }
  int d = *(row + 3) - *row;
  int shift = d >> 1;
  int q = out[3] / (d + 1);
  printf("%d %d %d %d\n", out[0], out[3], shift, q);
  return 0;
}
