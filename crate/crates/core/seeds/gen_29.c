#include <stdio.h>
#include <stdlib.h>

struct rec {
  int key;
  int vals[3];
  long total;
};

struct rec recs[2];
int g_arr0[5] = {39, 9, 49, 8, 17};
int g_arr1[8] = {15, 1, 17, 26, 40, 11, 31, 9};
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

int g_70 = 18;
int *g_ptr = g_arr0;

int main() {
  int i;
  int v_1 = 27;
  short v_2 = 38;
  int v_3 = 28;
  int arr_4[7];
  for (i = 0; i < 7; i++) {
    arr_4[i] = i ^ 8;
  }
  char buf_5[8];
  for (i = 0; i < 8; i++) {
    buf_5[i] = 'a' | i;
  }
  int *p_6 = &arr_4[0];
  struct rec *r_7 = &recs[1];
  r_7->key = v_1 % 100;
  r_7->vals[2] = r_7->key + 1;
  r_7->total = r_7->vals[2] * 3;
  int *rp_8 = r_7->vals;
  v_1 = mix_add(v_1, p_6[1]);
  for (i = 0; i < 7; i++) {
    arr_4[i] = mix_add(arr_4[i], v_2 ^ 6) & 127;
    v_2 = mix_add(v_2, arr_4[i]);
  }
  if (v_1 & 3) {
    v_2 = mix_sub(v_2, v_1);
  }
  *p_6 = *(p_6 + 4);
  v_3 = mix_add(v_2, buf_5[0]);
  v_3 = mix_div(v_3, v_3);
  v_2 = mix_mul(v_2, 3);
  v_2 = mix_mul(v_1, 5);
  g_70 = mix_mul(v_3, 4);
  int *q_9;
  for (q_9 = arr_4; q_9 < arr_4 + 7; q_9++) {
    g_70 = mix_add(g_70, *q_9);
  }
  v_1 = mix_add(v_1, *(g_ptr + 1));
  *(g_ptr + 4) = (mix_sub(v_3, *p_6)) & 127;
  {
    int *h_10 = malloc(4 * sizeof(int));
    for (i = 0; i < 4; i++) {
      h_10[i] = mix_mul(i, 3) ^ (g_70 & 7);
    }
    g_70 = (g_70 + *(h_10 + 2)) & 1023;
    int *hp_11 = h_10 + 3;
    g_70 = (g_70 - *hp_11) & 1023;
    free(h_10);
  }
  {
    int *h_12 = malloc(2 * sizeof(int));
    for (i = 0; i < 2; i++) {
      h_12[i] = mix_mul(i, 3) ^ (g_70 & 7);
    }
    g_70 = (g_70 + *(h_12 + 1)) & 1023;
    int *hp_13 = h_12 + 1;
    g_70 = (g_70 - *hp_13) & 1023;
    free(h_12);
  }
  printf("%d %d %d %d\n", (int)g_70, (int)v_1, (int)v_2, (int)v_3);
  printf("%d\n", buf_5[7]);
  return 0;
}
