#include <stdio.h>
#include <stdlib.h>

int g_arr0[4] = {6, 1, 7, 40};
int g_arr1[8] = {48, 0, 35, 35, 5, 8, 33, 45};
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

int g_39 = 1;
int *g_ptr = g_arr0;

int func_1(int *p, int n) {
  int i;
  int acc = 38;
  for (i = 0; i < n; i++) {
    acc = mix_add(acc, p[i] ^ 6);
  }
  return acc;
}

int func_2(int *p, int n) {
  int i;
  int acc = 56;
  for (i = 0; i < n; i++) {
    acc = mix_add(acc, p[i] ^ 3);
  }
  return acc;
}

int main() {
  int i;
  long v_1 = 13;
  short v_2 = 15;
  int arr_3[7];
  for (i = 0; i < 7; i++) {
    arr_3[i] = i ^ 6;
  }
  char buf_4[4];
  for (i = 0; i < 4; i++) {
    buf_4[i] = 'a' | i;
  }
  int *p_5 = &arr_3[4];
  if (v_1 & 3) {
    v_1 = mix_sub(v_1, v_1);
  }
  p_5 = &g_arr0[0];
  if (v_1 & 3) {
    v_1 = mix_sub(v_1, v_1);
  }
  for (i = 0; i < 8; i++) {
    g_arr1[i] = mix_add(g_arr1[i], v_1 ^ 8) & 127;
    v_1 = mix_add(v_1, g_arr1[i]);
  }
  v_1 = mix_shl(v_2, g_39);
  v_1 -= 1;
  v_1 &= 1023;
  {
    int *h_6 = malloc(2 * sizeof(int));
    for (i = 0; i < 2; i++) {
      h_6[i] = mix_mul(i, 2) ^ (g_39 & 7);
    }
    g_39 = (g_39 + *(h_6 + 1)) & 1023;
    int *hp_7 = h_6 + 1;
    g_39 = (g_39 - *hp_7) & 1023;
    free(h_6);
  }
  if (v_1 & 3) {
    v_2 = mix_sub(v_2, v_1);
  }
  printf("%d %d %d\n", (int)g_39, (int)v_1, (int)v_2);
  printf("%d\n", buf_4[3]);
  return 0;
}
