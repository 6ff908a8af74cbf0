#include <stdio.h>
#include <stdlib.h>

struct rec {
  int key;
  int vals[3];
  long total;
};

struct rec recs[2];
int g_arr0[5] = {41, 14, 45, 35, 23};
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

int g_71 = 4;
int *g_ptr = g_arr0;

int func_1(int *p, int n) {
  int i;
  int acc = 2;
  for (i = 0; i < n; i++) {
    acc = mix_add(mix_mul(acc, 7), *(p + i));
  }
  return acc;
}

int func_2(int *p, int n) {
  int i;
  int acc = 83;
  for (i = 0; i < n; i++) {
    acc = mix_add(acc, p[i] ^ 6);
  }
  return acc;
}

int main() {
  int i;
  short v_1 = 28;
  int v_2 = 10;
  int arr_3[4];
  for (i = 0; i < 4; i++) {
    arr_3[i] = i ^ 2;
  }
  char buf_4[9];
  for (i = 0; i < 9; i++) {
    buf_4[i] = 'a' | i;
  }
  int *p_5 = &arr_3[3];
  struct rec *r_6 = &recs[1];
  r_6->key = g_71 % 100;
  r_6->vals[2] = r_6->key + 1;
  r_6->total = r_6->vals[2] * 3;
  int *rp_7 = r_6->vals;
  {
    int *h_8 = malloc(3 * sizeof(int));
    for (i = 0; i < 3; i++) {
      h_8[i] = mix_mul(i, 1) ^ (g_71 & 7);
    }
    g_71 = (g_71 + *(h_8 + 0)) & 1023;
    int *hp_9 = h_8 + 2;
    g_71 = (g_71 - *hp_9) & 1023;
    free(h_8);
  }
  g_71 = mix_div(v_2, g_71);
  g_71 = mix_add(g_71, g_ptr[3]);
  {
    int t_10 = v_2;
    int *q_11 = &t_10;
    *q_11 = mix_add(*q_11, 44);
    v_2 = t_10;
  }
  v_2 = mix_add(v_1, *(g_ptr + 1));
  for (i = 0; i < 4; i++) {
    arr_3[i] = mix_add(arr_3[i], v_2 ^ 6) & 127;
    v_2 = mix_add(v_2, arr_3[i]);
  }
  v_2 = mix_add(v_2, v_2);
  g_71 = mix_add(g_71, rp_7[0]);
  int n_12 = 2 + (v_2 & 3);
  while (n_12 > 0) {
    v_1 = mix_add(v_1, v_1);
    *(g_ptr + 4) = (mix_add(v_2, arr_3[1])) & 127;
    v_1 = mix_add(v_1, g_arr0[0]);
    n_12--;
  }
  g_71 = mix_sub(v_1, v_2);
  printf("%d %d %d\n", (int)g_71, (int)v_1, (int)v_2);
  printf("%d\n", buf_4[8]);
  return 0;
}
