#include <stdio.h>
#include <stdlib.h>

struct rec {
  int key;
  int vals[3];
  long total;
};

struct rec recs[2];
int g_arr0[4] = {49, 38, 9, 40};
int g_arr1[7] = {4, 33, 9, 27, 41, 24, 20};
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

int g_74 = 15;
int *g_ptr = g_arr0;

int func_1(int *p, int n) {
  int i;
  int acc = 41;
  for (i = 0; i < n; i++) {
    acc = mix_add(mix_mul(acc, 8), *(p + i));
  }
  return acc;
}

int main() {
  int i;
  short v_1 = 1;
  int v_2 = 26;
  int v_3 = 15;
  int arr_4[5];
  for (i = 0; i < 5; i++) {
    arr_4[i] = i ^ 5;
  }
  char buf_5[9];
  for (i = 0; i < 9; i++) {
    buf_5[i] = 'a' | i;
  }
  int *p_6 = &arr_4[4];
  struct rec *r_7 = &recs[1];
  r_7->key = v_1 % 100;
  r_7->vals[2] = r_7->key + 1;
  r_7->total = r_7->vals[2] * 3;
  int *rp_8 = r_7->vals;
  v_1 = mix_add(v_2, *(rp_8 + 2));
  v_2 = mix_div(v_3, v_3);
  *(g_ptr + 3) = (mix_mul(v_2, 9)) & 127;
  for (i = 0; i < 7; i++) {
    g_arr1[i] = mix_add(g_arr1[i], v_3 ^ 5) & 127;
    v_3 = mix_add(v_3, g_arr1[i]);
  }
  g_arr0[1] = (mix_add(v_3, v_3)) & 127;
  buf_5[4] = (mix_add(v_3, g_74)) & 127;
  g_74 = mix_add(g_74, func_1(g_arr1, 5));
  g_arr1[1] = (mix_sub(g_74, *p_6)) & 127;
  printf("%d %d %d %d\n", (int)g_74, (int)v_1, (int)v_2, (int)v_3);
  printf("%d\n", buf_5[8]);
  return 0;
}
