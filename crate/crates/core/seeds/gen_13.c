#include <stdio.h>
#include <stdlib.h>

struct rec {
  int key;
  int vals[3];
  long total;
};

struct rec recs[3];
int g_arr0[4] = {38, 8, 36, 37};
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

int g_21 = 16;
int *g_ptr = g_arr0;

int func_1(int *p, int n) {
  int i;
  int acc = 69;
  for (i = 0; i < n; i++) {
    acc = mix_add(acc, p[i] ^ 7);
  }
  return acc;
}

int main() {
  int i;
  long v_1 = 2;
  short v_2 = 35;
  long v_3 = 14;
  int arr_4[3];
  for (i = 0; i < 3; i++) {
    arr_4[i] = i ^ 7;
  }
  char buf_5[7];
  for (i = 0; i < 7; i++) {
    buf_5[i] = 'a' | i;
  }
  int *p_6 = &arr_4[2];
  struct rec *r_7 = &recs[1];
  r_7->key = g_21 % 100;
  r_7->vals[2] = r_7->key + 1;
  r_7->total = r_7->vals[2] * 3;
  int *rp_8 = r_7->vals;
  v_3 *= 7;
  v_3 &= 1023;
  {
    int *h_9 = malloc(3 * sizeof(int));
    for (i = 0; i < 3; i++) {
      h_9[i] = mix_mul(i, 3) ^ (g_21 & 7);
    }
    g_21 = (g_21 + *(h_9 + 0)) & 1023;
    int *hp_10 = h_9 + 2;
    g_21 = (g_21 - *hp_10) & 1023;
    free(h_9);
  }
  {
    int t_11 = v_3;
    int *q_12 = &t_11;
    *q_12 = mix_add(*q_12, 16);
    v_3 = t_11;
  }
  g_21 = mix_sub(g_21, *p_6);
  char *q_13;
  for (q_13 = buf_5; q_13 < buf_5 + 7; q_13++) {
    v_3 = mix_add(v_3, *q_13);
  }
  int *q_14;
  for (q_14 = arr_4; q_14 < arr_4 + 3; q_14++) {
    v_1 = mix_add(v_1, *q_14);
  }
  v_2 = mix_mul(v_1, 4);
  *g_ptr = (mix_shl(g_21, g_21)) & 127;
  v_2 = mix_sub(g_21, *p_6);
  v_2 = mix_mul(g_21, 7);
  int *q_15;
  for (q_15 = arr_4; q_15 < arr_4 + 3; q_15++) {
    v_3 = mix_add(v_3, *q_15);
  }
  printf("%d %d %d %d\n", (int)g_21, (int)v_1, (int)v_2, (int)v_3);
  printf("%d\n", buf_5[6]);
  return 0;
}
