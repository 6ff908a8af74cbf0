#include <stdio.h>
#include <stdlib.h>

struct rec {
  int key;
  int vals[3];
  long total;
};

struct rec recs[2];
int g_arr0[5] = {36, 38, 20, 34, 8};
int g_arr1[8] = {20, 19, 19, 19, 47, 13, 6, 22};
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

int g_91 = 19;
int *g_ptr = g_arr0;

int main() {
  int i;
  short v_1 = 39;
  long v_2 = 10;
  short v_3 = 1;
  int arr_4[7];
  for (i = 0; i < 7; i++) {
    arr_4[i] = i ^ 2;
  }
  char buf_5[8];
  for (i = 0; i < 8; i++) {
    buf_5[i] = 'a' | i;
  }
  int *p_6 = &arr_4[2];
  struct rec *r_7 = &recs[1];
  r_7->key = v_2 % 100;
  r_7->vals[2] = r_7->key + 1;
  r_7->total = r_7->vals[2] * 3;
  int *rp_8 = r_7->vals;
  v_1 = mix_add(g_91, v_2);
  int *q_9;
  for (q_9 = arr_4; q_9 < arr_4 + 7; q_9++) {
    v_1 = mix_add(v_1, *q_9);
  }
  int *q_10;
  for (q_10 = g_arr1; q_10 < g_arr1 + 8; q_10++) {
    v_2 = mix_add(v_2, *q_10);
  }
  for (i = 0; i < 5; i++) {
    g_arr0[i] = mix_add(g_arr0[i], g_91 ^ 1) & 127;
    g_91 = mix_add(g_91, g_arr0[i]);
  }
  g_91 = mix_add(v_2, g_arr0[0]);
  p_6 = &g_arr0[3];
  v_2 = mix_add(v_3, buf_5[6]);
  int n_11 = 2 + (g_91 & 3);
  while (n_11 > 0) {
    g_91 = mix_add(v_3, *(rp_8 + 2));
    {
      int t_12 = v_2;
      int *q_13 = &t_12;
      *q_13 = mix_add(*q_13, 36);
      v_2 = t_12;
    }
    g_91 = mix_mul(n_11, 5);
    n_11--;
  }
  if (v_2 == v_3) {
    *g_ptr = *(g_ptr + 2);
    v_1 = mix_sub(v_2, *rp_8);
    g_91 = mix_add(v_1, *(rp_8 + 1));
  }
  {
    int t_14 = v_2;
    int *q_15 = &t_14;
    *q_15 = mix_add(*q_15, 40);
    v_2 = t_14;
  }
  g_91 = mix_shl(v_3, g_91);
  v_1 = mix_sub(v_3, *p_6);
  v_2 *= 6;
  v_2 &= 1023;
  int *q_16;
  for (q_16 = g_arr0; q_16 < g_arr0 + 5; q_16++) {
    v_3 = mix_add(v_3, *q_16);
  }
  printf("%d %d %d %d\n", (int)g_91, (int)v_1, (int)v_2, (int)v_3);
  printf("%d\n", buf_5[7]);
  return 0;
}
