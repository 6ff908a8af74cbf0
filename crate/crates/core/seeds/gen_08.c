#include <stdio.h>
#include <stdlib.h>

struct rec {
  int key;
  int vals[3];
  long total;
};

struct rec recs[2];
int g_arr0[8] = {14, 1, 46, 42, 19, 34, 2, 40};
int g_arr1[5] = {18, 45, 13, 10, 3};
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

int g_0 = 17;
int *g_ptr = g_arr0;

int func_1(int *p, int n) {
  int i;
  int acc = 55;
  for (i = 0; i < n; i++) {
    acc = mix_add(mix_mul(acc, 1), *(p + i));
  }
  return acc;
}

int main() {
  int i;
  short v_1 = 20;
  long v_2 = 26;
  short v_3 = 17;
  int arr_4[7];
  for (i = 0; i < 7; i++) {
    arr_4[i] = i ^ 5;
  }
  char buf_5[6];
  for (i = 0; i < 6; i++) {
    buf_5[i] = 'a' | i;
  }
  int *p_6 = &arr_4[1];
  struct rec *r_7 = &recs[1];
  r_7->key = v_3 % 100;
  r_7->vals[2] = r_7->key + 1;
  r_7->total = r_7->vals[2] * 3;
  int *rp_8 = r_7->vals;
  v_3 = mix_sub(v_1, v_3);
  {
    int t_9 = v_2;
    int *q_10 = &t_9;
    *q_10 = mix_add(*q_10, 44);
    v_2 = t_9;
  }
  char *q_11;
  for (q_11 = buf_5; q_11 < buf_5 + 6; q_11++) {
    v_2 = mix_add(v_2, *q_11);
  }
  g_0 = mix_add(v_3, arr_4[4]);
  g_arr1[4] = (mix_shl(v_3, v_3)) & 127;
  *rp_8 = *(rp_8 + 2);
  int n_12 = 2 + (v_2 & 3);
  while (n_12 > 0) {
    g_0 = mix_add(g_0, func_1(g_arr1, 4));
    {
      int t_13 = v_1;
      int *q_14 = &t_13;
      *q_14 = mix_add(*q_14, 9);
      v_1 = t_13;
    }
    g_ptr = &arr_4[1];
    n_12--;
  }
  {
    int *h_15 = malloc(2 * sizeof(int));
    for (i = 0; i < 2; i++) {
      h_15[i] = mix_mul(i, 1) ^ (v_1 & 7);
    }
    v_1 = (v_1 + *(h_15 + 0)) & 1023;
    int *hp_16 = h_15 + 1;
    v_1 = (v_1 - *hp_16) & 1023;
    free(h_15);
  }
  v_3 = mix_div(v_1, v_3);
  v_3 = mix_mul(g_0, 1);
  v_2 = mix_add(v_2, func_1(arr_4, 6));
  g_0 = mix_add(g_0, func_1(g_arr1, 2));
  {
    int t_17 = v_3;
    int *q_18 = &t_17;
    *q_18 = mix_add(*q_18, 31);
    v_3 = t_17;
  }
  g_0 = mix_add(v_2, *(p_6 + 2));
  v_2 = mix_sub(v_1, v_3);
  printf("%d %d %d %d\n", (int)g_0, (int)v_1, (int)v_2, (int)v_3);
  printf("%d\n", buf_5[5]);
  return 0;
}
