#include <stdio.h>
#include <stdlib.h>

struct rec {
  int key;
  int vals[3];
  long total;
};

struct rec recs[3];
int g_arr0[4] = {48, 3, 22, 30};
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

int g_95 = 2;
int *g_ptr = g_arr0;

int func_1(int *p, int n) {
  int i;
  int acc = 78;
  for (i = 0; i < n; i++) {
    if (p[i] > (acc & 63)) {
      acc = mix_add(acc, p[i]);
    }
  }
  return acc;
}

int func_2(int *p, int n) {
  int i;
  int acc = 19;
  for (i = 0; i < n; i++) {
    acc = mix_add(mix_mul(acc, 7), *(p + i));
  }
  return acc;
}

int main() {
  int i;
  int v_1 = 38;
  int v_2 = 12;
  short v_3 = 4;
  int arr_4[4];
  for (i = 0; i < 4; i++) {
    arr_4[i] = i ^ 5;
  }
  char buf_5[6];
  for (i = 0; i < 6; i++) {
    buf_5[i] = 'a' | i;
  }
  int *p_6 = &arr_4[3];
  struct rec *r_7 = &recs[1];
  r_7->key = v_1 % 100;
  r_7->vals[2] = r_7->key + 1;
  r_7->total = r_7->vals[2] * 3;
  int *rp_8 = r_7->vals;
  int n_9 = 2 + (g_95 & 3);
  while (n_9 > 0) {
    arr_4[0] = (mix_div(v_1, g_95)) & 127;
    v_2 = mix_sub(g_95, *rp_8);
    v_3 -= 4;
    v_3 &= 1023;
    n_9--;
  }
  int *q_10;
  for (q_10 = g_arr0; q_10 < g_arr0 + 4; q_10++) {
    v_3 = mix_add(v_3, *q_10);
  }
  arr_4[3] = (mix_mul(v_2, 7)) & 127;
  for (i = 0; i < 4; i++) {
    arr_4[i] = mix_add(arr_4[i], g_95 ^ 3) & 127;
    g_95 = mix_add(g_95, arr_4[i]);
  }
  g_95 *= 1;
  g_95 &= 1023;
  v_1 = mix_add(v_2, g_95);
  for (i = 0; i < 6; i++) {
    buf_5[i] = mix_add(buf_5[i], g_95 ^ 3) & 127;
    g_95 = mix_add(g_95, buf_5[i]);
  }
  {
    int t_11 = v_2;
    int *q_12 = &t_11;
    *q_12 = mix_add(*q_12, 14);
    v_2 = t_11;
  }
  printf("%d %d %d %d\n", (int)g_95, (int)v_1, (int)v_2, (int)v_3);
  printf("%d\n", buf_5[5]);
  return 0;
}
