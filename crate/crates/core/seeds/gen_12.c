#include <stdio.h>
#include <stdlib.h>

struct rec {
  int key;
  int vals[3];
  long total;
};

struct rec recs[3];
int g_arr0[4] = {48, 30, 5, 42};
int g_arr1[6] = {24, 21, 43, 4, 5, 32};
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

int g_9 = 12;
int *g_ptr = g_arr0;

int func_1(int *p, int n) {
  int i;
  int acc = 44;
  for (i = 0; i < n; i++) {
    acc = mix_add(acc, p[i] ^ 7);
  }
  return acc;
}

int func_2(int *p, int n) {
  int i;
  int acc = 81;
  for (i = 0; i < n; i++) {
    acc = mix_add(acc, p[i] ^ 8);
  }
  return acc;
}

int main() {
  int i;
  int v_1 = 37;
  int v_2 = 18;
  short v_3 = 12;
  int arr_4[5];
  for (i = 0; i < 5; i++) {
    arr_4[i] = i ^ 5;
  }
  char buf_5[6];
  for (i = 0; i < 6; i++) {
    buf_5[i] = 'a' | i;
  }
  int *p_6 = &arr_4[3];
  struct rec *r_7 = &recs[1];
  r_7->key = g_9 % 100;
  r_7->vals[2] = r_7->key + 1;
  r_7->total = r_7->vals[2] * 3;
  int *rp_8 = r_7->vals;
  v_3 = mix_sub(v_1, g_9);
  int *q_9;
  for (q_9 = arr_4; q_9 < arr_4 + 5; q_9++) {
    v_2 = mix_add(v_2, *q_9);
  }
  v_2 = mix_add(v_2, func_1(g_arr0, 3));
  v_2 = mix_add(v_2, g_ptr[3]);
  {
    int t_10 = g_9;
    int *q_11 = &t_10;
    *q_11 = mix_add(*q_11, 33);
    g_9 = t_10;
  }
  rp_8 = &arr_4[4];
  *g_ptr = *(g_ptr + 2);
  v_1 = mix_sub(g_9, v_3);
  v_1 = mix_add(v_1, p_6[1]);
  v_1 = mix_add(v_1, func_1(arr_4, 3));
  if (v_3 & 3) {
    g_9 = mix_sub(g_9, v_3);
  }
  p_6 = &g_arr1[0];
  printf("%d %d %d %d\n", (int)g_9, (int)v_1, (int)v_2, (int)v_3);
  printf("%d\n", buf_5[5]);
  return 0;
}
