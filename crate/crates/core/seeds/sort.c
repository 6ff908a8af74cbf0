#include <stdio.h>

int data[10] = {9, 3, 7, 1, 8, 2, 6, 0, 5, 4};

void swap(int *x, int *y) {
  int t = *x;
  *x = *y;
  *y = t;
}

int main() {
  int i;
  int j;
  for (i = 0; i < 10; i++) {
    for (j = 0; j + 1 < 10 - i; j++) {
      if (data[j] > data[j + 1]) {
        swap(&data[j], &data[j + 1]);
      }
    }
  }
  int *lo = data;
  int *hi = data + 9;
  int span = *hi - *lo;
  long weighted = 0;
  for (i = 0; i < 10; i++) {
    weighted += (long)data[i] * i;
  }
  printf("%d %d %ld\n", span, data[4], weighted);
  return 0;
}
