#include <stdio.h>

int memo[20];

int fib(int n) {
  if (n < 2) {
    return n;
  }
  if (memo[n]) {
    return memo[n];
  }
  int r = fib(n - 1) + fib(n - 2);
  memo[n] = r;
  return r;
}

int gcd(int a, int b) {
  if (b == 0) {
    return a;
  }
  return gcd(b, a % b);
}

int main() {
  int f = fib(15);
  int g = gcd(f, 48);
  int *p = &memo[10];
  int h = *p << 2;
  printf("%d %d %d\n", f, g, h);
  return 0;
}
