#include <stdio.h>
#include <stdlib.h>

struct rec {
  int key;
  int vals[3];
  long total;
};

struct rec recs[3];
int g_arr0[8] = {35, 29, 20, 40, 42, 22, 20, 18};
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

int g_9 = 9;
int *g_ptr = g_arr0;

int func_1(int *p, int n) {
  int i;
  int acc = 37;
  for (i = 0; i < n; i++) {
    acc = mix_add(acc, p[i] ^ 8);
  }
  return acc;
}

int main() {
  int i;
  int v_1 = 29;
  int v_2 = 34;
  int arr_3[7];
  for (i = 0; i < 7; i++) {
    arr_3[i] = i ^ 7;
  }
  char buf_4[5];
  for (i = 0; i < 5; i++) {
    buf_4[i] = 'a' | i;
  }
  int *p_5 = &arr_3[0];
  struct rec *r_6 = &recs[1];
  r_6->key = v_2 % 100;
  r_6->vals[2] = r_6->key + 1;
  r_6->total = r_6->vals[2] * 3;
  int *rp_7 = r_6->vals;
  g_9 = mix_add(g_9, rp_7[2]);
  *p_5 = *(p_5 + 6);
  v_1 = mix_add(g_9, *(g_ptr + 3));
  v_2 = mix_sub(v_2, g_9);
  for (i = 0; i < 7; i++) {
    arr_3[i] = mix_add(arr_3[i], v_2 ^ 8) & 127;
    v_2 = mix_add(v_2, arr_3[i]);
  }
  for (i = 0; i < 8; i++) {
    g_arr0[i] = mix_add(g_arr0[i], v_1 ^ 9) & 127;
    v_1 = mix_add(v_1, g_arr0[i]);
  }
  int n_8 = 2 + (v_1 & 3);
  while (n_8 > 0) {
    v_2 = mix_add(n_8, *(p_5 + 2));
    v_1 = mix_add(v_1, func_1(arr_3, 2));
    *p_5 = *(p_5 + 2);
    n_8--;
  }
  {
    int *h_9 = malloc(2 * sizeof(int));
    for (i = 0; i < 2; i++) {
      h_9[i] = mix_mul(i, 4) ^ (g_9 & 7);
    }
    g_9 = (g_9 + *(h_9 + 0)) & 1023;
    int *hp_10 = h_9 + 1;
    g_9 = (g_9 - *hp_10) & 1023;
    free(h_9);
  }
  v_2 = mix_add(v_2, func_1(arr_3, 6));
  if (v_2 & 3) {
    v_2 = mix_sub(v_2, v_2);
  }
  {
    int t_11 = g_9;
    int *q_12 = &t_11;
    *q_12 = mix_add(*q_12, 39);
    g_9 = t_11;
  }
  g_9 -= 1;
  g_9 &= 1023;
  int *q_13;
  for (q_13 = arr_3; q_13 < arr_3 + 7; q_13++) {
    g_9 = mix_add(g_9, *q_13);
  }
  g_9 = mix_add(g_9, func_1(g_arr0, 7));
  printf("%d %d %d\n", (int)g_9, (int)v_1, (int)v_2);
  printf("%d\n", buf_4[4]);
  return 0;
}
