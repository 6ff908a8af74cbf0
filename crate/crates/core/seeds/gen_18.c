#include <stdio.h>
#include <stdlib.h>

struct rec {
  int key;
  int vals[3];
  long total;
};

struct rec recs[3];
int g_arr0[3] = {17, 45, 8};
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

int g_65 = 25;
int *g_ptr = g_arr0;

int func_1(int *p, int n) {
  int i;
  int acc = 68;
  for (i = 0; i < n; i++) {
    if (p[i] > (acc & 63)) {
      acc = mix_add(acc, p[i]);
    }
  }
  return acc;
}

int func_2(int *p, int n) {
  int i;
  int acc = 15;
  for (i = 0; i < n; i++) {
    acc = mix_add(acc, p[i] ^ 4);
  }
  return acc;
}

int main() {
  int i;
  short v_1 = 14;
  long v_2 = 38;
  long v_3 = 4;
  int arr_4[7];
  for (i = 0; i < 7; i++) {
    arr_4[i] = i ^ 8;
  }
  char buf_5[4];
  for (i = 0; i < 4; i++) {
    buf_5[i] = 'a' | i;
  }
  int *p_6 = &arr_4[0];
  struct rec *r_7 = &recs[1];
  r_7->key = v_3 % 100;
  r_7->vals[2] = r_7->key + 1;
  r_7->total = r_7->vals[2] * 3;
  int *rp_8 = r_7->vals;
  int *q_9;
  for (q_9 = g_arr0; q_9 < g_arr0 + 3; q_9++) {
    v_1 = mix_add(v_1, *q_9);
  }
  {
    int *h_10 = malloc(2 * sizeof(int));
    for (i = 0; i < 2; i++) {
      h_10[i] = mix_mul(i, 4) ^ (g_65 & 7);
    }
    g_65 = (g_65 + *(h_10 + 0)) & 1023;
    int *hp_11 = h_10 + 1;
    g_65 = (g_65 - *hp_11) & 1023;
    free(h_10);
  }
  buf_5[3] = (mix_add(g_65, v_3)) & 127;
  arr_4[5] = (mix_add(v_2, *(p_6 + 4))) & 127;
  *g_ptr = *(g_ptr + 1);
  {
    int *h_12 = malloc(2 * sizeof(int));
    for (i = 0; i < 2; i++) {
      h_12[i] = mix_mul(i, 4) ^ (g_65 & 7);
    }
    g_65 = (g_65 + *(h_12 + 1)) & 1023;
    int *hp_13 = h_12 + 1;
    g_65 = (g_65 - *hp_13) & 1023;
    free(h_12);
  }
  g_65 = mix_add(v_2, buf_5[3]);
  int n_14 = 2 + (g_65 & 3);
  while (n_14 > 0) {
    v_2 = mix_add(g_65, v_3);
    v_3 = mix_shl(v_1, v_1);
    v_2 = mix_add(v_1, buf_5[2]);
    n_14--;
  }
  if (v_1 == v_2) {
    g_65 = mix_mul(g_65, 4);
    g_65 = mix_div(v_2, g_65);
    v_2 = mix_add(v_2, p_6[4]);
  }
  v_2++;
  v_2 &= 1023;
  int n_15 = 2 + (v_2 & 3);
  while (n_15 > 0) {
    *rp_8 = (mix_shl(v_3, v_1)) & 127;
    if (v_1 & 3) {
      v_2 = mix_sub(v_2, v_1);
    }
    g_65 = mix_add(g_65, func_1(g_arr0, 1));
    n_15--;
  }
  v_2 = mix_add(v_1, *(p_6 + 4));
  int *q_16;
  for (q_16 = g_arr0; q_16 < g_arr0 + 3; q_16++) {
    v_2 = mix_add(v_2, *q_16);
  }
  printf("%d %d %d %d\n", (int)g_65, (int)v_1, (int)v_2, (int)v_3);
  printf("%d\n", buf_5[3]);
  return 0;
}
