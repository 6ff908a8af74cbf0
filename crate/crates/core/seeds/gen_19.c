#include <stdio.h>
#include <stdlib.h>

struct rec {
  int key;
  int vals[3];
  long total;
};

struct rec recs[2];
int g_arr0[8] = {0, 31, 46, 33, 14, 48, 27, 41};
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

int g_51 = 25;
int *g_ptr = g_arr0;

int func_1(int *p, int n) {
  int i;
  int acc = 48;
  for (i = 0; i < n; i++) {
    if (p[i] > (acc & 63)) {
      acc = mix_add(acc, p[i]);
    }
  }
  return acc;
}

int main() {
  int i;
  short v_1 = 8;
  short v_2 = 2;
  int v_3 = 20;
  int arr_4[5];
  for (i = 0; i < 5; i++) {
    arr_4[i] = i ^ 2;
  }
  char buf_5[9];
  for (i = 0; i < 9; i++) {
    buf_5[i] = 'a' | i;
  }
  int *p_6 = &arr_4[2];
  struct rec *r_7 = &recs[1];
  r_7->key = v_1 % 100;
  r_7->vals[2] = r_7->key + 1;
  r_7->total = r_7->vals[2] * 3;
  int *rp_8 = r_7->vals;
  char *q_9;
  for (q_9 = buf_5; q_9 < buf_5 + 9; q_9++) {
    v_1 = mix_add(v_1, *q_9);
  }
  for (i = 0; i < 8; i++) {
    g_arr0[i] = mix_add(g_arr0[i], v_1 ^ 3) & 127;
    v_1 = mix_add(v_1, g_arr0[i]);
  }
  v_1 = mix_sub(v_3, v_1);
  v_1 = mix_mul(g_51, 8);
  if (v_2 < g_51) {
    v_1 = mix_shl(v_1, v_1);
    if (v_3 & 3) {
      v_3 = mix_sub(v_3, v_3);
    }
    g_51 = mix_add(g_51, func_1(arr_4, 2));
  }
  v_3 = mix_add(g_51, v_2);
  if (v_1 & 3) {
    v_2 = mix_sub(v_2, v_1);
  }
  v_3 *= 8;
  v_3 &= 1023;
  g_51 = mix_shl(v_3, v_2);
  printf("%d %d %d %d\n", (int)g_51, (int)v_1, (int)v_2, (int)v_3);
  printf("%d\n", buf_5[8]);
  return 0;
}
