#include <stdio.h>
#include <stdlib.h>

int g_arr0[4] = {20, 18, 42, 44};
int mix_add(int a, int b) {
  return (a + b) & 1023;
}

int mix_sub(int a, int b) {
  return (a - b) & 1023;
}

int mix_mul(int a, int b) {
  return (a * b) & 1023;
}

int mix_shl(int a, int b) {
  return ((a & 255) << (b & 7)) & 1023;
}

int mix_div(int a, int b) {
  if (b % 2) {
    return a / (b % 7 + 8);
  }
  return a % (b % 5 + 6);
}

int g_78 = 16;
int *g_ptr = g_arr0;

int func_1(int *p, int n) {
  int i;
  int acc = 9;
  for (i = 0; i < n; i++) {
    acc = mix_add(mix_mul(acc, 6), *(p + i));
  }
  return acc;
}

int func_2(int *p, int n) {
  int i;
  int acc = 72;
  for (i = 0; i < n; i++) {
    if (p[i] > (acc & 63)) {
      acc = mix_add(acc, p[i]);
    }
  }
  return acc;
}

int main() {
  int i;
  long v_1 = 20;
  short v_2 = 15;
  int v_3 = 10;
  int arr_4[7];
  for (i = 0; i < 7; i++) {
    arr_4[i] = i ^ 4;
  }
  char buf_5[9];
  for (i = 0; i < 9; i++) {
    buf_5[i] = 'a' | i;
  }
  int *p_6 = &arr_4[6];
  v_3 = mix_mul(v_3, *p_6);
  *g_ptr = *(g_ptr + 3);
  v_3 = mix_mul(v_2, 7);
  v_3 = mix_shl(v_1, v_1);
  *(g_ptr + 1) = (mix_shl(g_78, g_78)) & 127;
  g_ptr = &arr_4[1];
  if (v_3 & 3) {
    v_2 = mix_sub(v_2, v_3);
  }
  v_2 = mix_sub(v_1, *p_6);
  v_2 = mix_add(v_2, func_1(g_arr0, 1));
  *p_6 = (mix_add(v_2, v_1)) & 127;
  v_1 = mix_add(v_3, v_2);
  for (i = 0; i < 4; i++) {
    g_arr0[i] = mix_add(g_arr0[i], v_1 ^ 8) & 127;
    v_1 = mix_add(v_1, g_arr0[i]);
  }
  g_78 = mix_div(v_3, v_2);
  printf("%d %d %d %d\n", (int)g_78, (int)v_1, (int)v_2, (int)v_3);
  printf("%d\n", buf_5[8]);
  return 0;
}
