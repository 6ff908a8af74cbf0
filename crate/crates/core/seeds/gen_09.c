#include <stdio.h>
#include <stdlib.h>

struct rec {
  int key;
  int vals[3];
  long total;
};

struct rec recs[3];
int g_arr0[6] = {34, 15, 26, 29, 47, 12};
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

int g_90 = 28;
int *g_ptr = g_arr0;

int func_1(int *p, int n) {
  int i;
  int acc = 13;
  for (i = 0; i < n; i++) {
    acc = mix_add(acc, p[i] ^ 5);
  }
  return acc;
}

int main() {
  int i;
  long v_1 = 16;
  int v_2 = 19;
  short v_3 = 14;
  int arr_4[7];
  for (i = 0; i < 7; i++) {
    arr_4[i] = i ^ 5;
  }
  char buf_5[9];
  for (i = 0; i < 9; i++) {
    buf_5[i] = 'a' | i;
  }
  int *p_6 = &arr_4[3];
  struct rec *r_7 = &recs[1];
  r_7->key = v_3 % 100;
  r_7->vals[2] = r_7->key + 1;
  r_7->total = r_7->vals[2] * 3;
  int *rp_8 = r_7->vals;
  v_1 = mix_mul(v_3, 9);
  v_3 = mix_add(v_3, g_ptr[0]);
  int n_9 = 2 + (v_3 & 3);
  while (n_9 > 0) {
    v_2 = mix_add(v_2, func_1(arr_4, 2));
    g_90 = mix_add(g_90, func_1(g_arr0, 4));
    *p_6 = *(p_6 + 1);
    n_9--;
  }
  g_90 = mix_sub(v_1, v_3);
  int *q_10;
  for (q_10 = g_arr0; q_10 < g_arr0 + 6; q_10++) {
    v_2 = mix_add(v_2, *q_10);
  }
  v_1 = mix_mul(g_90, 6);
  {
    int *h_11 = malloc(4 * sizeof(int));
    for (i = 0; i < 4; i++) {
      h_11[i] = mix_mul(i, 3) ^ (g_90 & 7);
    }
    g_90 = (g_90 + *(h_11 + 2)) & 1023;
    int *hp_12 = h_11 + 3;
    g_90 = (g_90 - *hp_12) & 1023;
    free(h_11);
  }
  g_90 = mix_add(g_90, func_1(g_arr0, 2));
  int *q_13;
  for (q_13 = g_arr0; q_13 < g_arr0 + 6; q_13++) {
    g_90 = mix_add(g_90, *q_13);
  }
  v_1 = mix_shl(v_2, v_3);
  *rp_8 = *(rp_8 + 1);
  buf_5[6] = (mix_mul(g_90, 9)) & 127;
  v_1 = mix_add(v_3, *(p_6 + 3));
  *g_ptr = *(g_ptr + 1);
  if (v_1 & 3) {
    v_3 = mix_sub(v_3, v_1);
  }
  printf("%d %d %d %d\n", (int)g_90, (int)v_1, (int)v_2, (int)v_3);
  printf("%d\n", buf_5[8]);
  return 0;
}
