#include <stdio.h>
#include <stdlib.h>

struct rec {
  int key;
  int vals[3];
  long total;
};

struct rec recs[2];
int g_arr0[7] = {25, 48, 2, 16, 19, 41, 3};
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

int g_82 = 29;
int *g_ptr = g_arr0;

int main() {
  int i;
  long v_1 = 38;
  int v_2 = 21;
  int v_3 = 19;
  int arr_4[7];
  for (i = 0; i < 7; i++) {
    arr_4[i] = i ^ 6;
  }
  char buf_5[7];
  for (i = 0; i < 7; i++) {
    buf_5[i] = 'a' | i;
  }
  int *p_6 = &arr_4[0];
  struct rec *r_7 = &recs[1];
  r_7->key = v_1 % 100;
  r_7->vals[2] = r_7->key + 1;
  r_7->total = r_7->vals[2] * 3;
  int *rp_8 = r_7->vals;
  g_82 = mix_add(v_2, *(g_ptr + 3));
  v_1 = mix_shl(v_3, v_2);
  int *q_9;
  for (q_9 = g_arr0; q_9 < g_arr0 + 7; q_9++) {
    v_1 = mix_add(v_1, *q_9);
  }
  {
    int *h_10 = malloc(2 * sizeof(int));
    for (i = 0; i < 2; i++) {
      h_10[i] = mix_mul(i, 3) ^ (g_82 & 7);
    }
    g_82 = (g_82 + *(h_10 + 1)) & 1023;
    int *hp_11 = h_10 + 1;
    g_82 = (g_82 - *hp_11) & 1023;
    free(h_10);
  }
  {
    int *h_12 = malloc(6 * sizeof(int));
    for (i = 0; i < 6; i++) {
      h_12[i] = mix_mul(i, 4) ^ (g_82 & 7);
    }
    g_82 = (g_82 + *(h_12 + 3)) & 1023;
    int *hp_13 = h_12 + 5;
    g_82 = (g_82 - *hp_13) & 1023;
    free(h_12);
  }
  g_82 = mix_sub(v_3, v_2);
  v_2 = mix_add(v_1, *(rp_8 + 2));
  v_1 = mix_sub(v_3, g_82);
  v_3 = mix_shl(v_1, v_1);
  g_82 = mix_div(v_1, g_82);
  char *q_14;
  for (q_14 = buf_5; q_14 < buf_5 + 7; q_14++) {
    v_3 = mix_add(v_3, *q_14);
  }
  g_82 = mix_add(g_82, *(rp_8 + 1));
  printf("%d %d %d %d\n", (int)g_82, (int)v_1, (int)v_2, (int)v_3);
  printf("%d\n", buf_5[6]);
  return 0;
}
