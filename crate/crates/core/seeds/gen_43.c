#include <stdio.h>
#include <stdlib.h>

struct rec {
  int key;
  int vals[3];
  long total;
};

struct rec recs[3];
int g_arr0[4] = {42, 2, 35, 40};
int g_arr1[8] = {20, 26, 30, 22, 11, 3, 38, 30};
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

int g_70 = 17;
int *g_ptr = g_arr0;

int func_1(int *p, int n) {
  int i;
  int acc = 98;
  for (i = 0; i < n; i++) {
    acc = mix_add(acc, p[i] ^ 2);
  }
  return acc;
}

int func_2(int *p, int n) {
  int i;
  int acc = 23;
  for (i = 0; i < n; i++) {
    acc = mix_add(mix_mul(acc, 9), *(p + i));
  }
  return acc;
}

int main() {
  int i;
  int v_1 = 33;
  short v_2 = 14;
  long v_3 = 2;
  int arr_4[5];
  for (i = 0; i < 5; i++) {
    arr_4[i] = i ^ 9;
  }
  char buf_5[4];
  for (i = 0; i < 4; i++) {
    buf_5[i] = 'a' | i;
  }
  int *p_6 = &arr_4[0];
  struct rec *r_7 = &recs[1];
  r_7->key = v_2 % 100;
  r_7->vals[2] = r_7->key + 1;
  r_7->total = r_7->vals[2] * 3;
  int *rp_8 = r_7->vals;
  if (g_70 & 3) {
    g_70 = mix_sub(g_70, g_70);
  }
  v_2 = mix_sub(v_3, v_1);
  g_70 = mix_add(g_70, func_2(g_arr1, 1));
  {
    int t_9 = v_3;
    int *q_10 = &t_9;
    *q_10 = mix_add(*q_10, 49);
    v_3 = t_9;
  }
  if (g_70 & 3) {
    v_2 = mix_sub(v_2, g_70);
  }
  int *q_11;
  for (q_11 = g_arr1; q_11 < g_arr1 + 8; q_11++) {
    v_1 = mix_add(v_1, *q_11);
  }
  if (v_2 != v_2) {
    v_2 = mix_sub(v_3, *p_6);
    {
      int *h_12 = malloc(6 * sizeof(int));
      for (i = 0; i < 6; i++) {
        h_12[i] = mix_mul(i, 1) ^ (g_70 & 7);
      }
      g_70 = (g_70 + *(h_12 + 4)) & 1023;
      int *hp_13 = h_12 + 5;
      g_70 = (g_70 - *hp_13) & 1023;
      free(h_12);
    }
    v_3 = mix_div(v_2, v_2);
  }
  v_3 = mix_div(v_1, v_2);
  int *q_14;
  for (q_14 = arr_4; q_14 < arr_4 + 5; q_14++) {
    v_2 = mix_add(v_2, *q_14);
  }
  g_70 = mix_shl(v_1, v_1);
  rp_8 = &g_arr0[2];
  buf_5[3] = (mix_mul(v_3, 5)) & 127;
  v_1 = mix_sub(v_1, g_70);
  printf("%d %d %d %d\n", (int)g_70, (int)v_1, (int)v_2, (int)v_3);
  printf("%d\n", buf_5[3]);
  return 0;
}
