#include <stdio.h>
#include <stdlib.h>

struct rec {
  int key;
  int vals[3];
  long total;
};

struct rec recs[2];
int g_arr0[8] = {27, 25, 10, 43, 39, 49, 18, 26};
int g_arr1[8] = {16, 20, 49, 15, 37, 3, 36, 8};
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

int g_11 = 10;
int *g_ptr = g_arr0;

int main() {
  int i;
  int v_1 = 28;
  long v_2 = 24;
  int arr_3[6];
  for (i = 0; i < 6; i++) {
    arr_3[i] = i ^ 4;
  }
  char buf_4[5];
  for (i = 0; i < 5; i++) {
    buf_4[i] = 'a' | i;
  }
  int *p_5 = &arr_3[4];
  struct rec *r_6 = &recs[1];
  r_6->key = v_2 % 100;
  r_6->vals[2] = r_6->key + 1;
  r_6->total = r_6->vals[2] * 3;
  int *rp_7 = r_6->vals;
  int *q_8;
  for (q_8 = g_arr1; q_8 < g_arr1 + 8; q_8++) {
    v_1 = mix_add(v_1, *q_8);
  }
  if (v_1 & 3) {
    v_1 = mix_sub(v_1, v_1);
  }
  if (v_1 != v_2) {
    g_11 = mix_add(g_11, g_ptr[0]);
    {
      int t_9 = v_1;
      int *q_10 = &t_9;
      *q_10 = mix_add(*q_10, 32);
      v_1 = t_9;
    }
    buf_4[1] = (mix_sub(v_2, g_11)) & 127;
  } else {
    v_2 = mix_div(g_11, v_1);
    if (g_11 & 3) {
      v_2 = mix_sub(v_2, g_11);
    }
  }
  g_arr0[0] = (mix_add(v_2, *(p_5 + 1))) & 127;
  if (v_2 < g_11) {
    g_11 = mix_mul(v_1, 9);
    int *q_11;
    for (q_11 = g_arr0; q_11 < g_arr0 + 8; q_11++) {
      v_1 = mix_add(v_1, *q_11);
    }
    g_11 = mix_shl(v_2, v_2);
  }
  int *q_12;
  for (q_12 = g_arr1; q_12 < g_arr1 + 8; q_12++) {
    v_1 = mix_add(v_1, *q_12);
  }
  buf_4[2] = (mix_mul(v_2, 1)) & 127;
  if (g_11 <= v_2) {
    int *q_13;
    for (q_13 = g_arr1; q_13 < g_arr1 + 8; q_13++) {
      g_11 = mix_add(g_11, *q_13);
    }
    v_2 = mix_sub(v_2, *p_5);
    g_11 = mix_add(v_1, *(p_5 + 1));
  } else {
    v_1 = mix_div(g_11, g_11);
    if (v_1 & 3) {
      g_11 = mix_sub(g_11, v_1);
    }
  }
  {
    int *h_14 = malloc(4 * sizeof(int));
    for (i = 0; i < 4; i++) {
      h_14[i] = mix_mul(i, 4) ^ (v_2 & 7);
    }
    v_2 = (v_2 + *(h_14 + 3)) & 1023;
    int *hp_15 = h_14 + 3;
    v_2 = (v_2 - *hp_15) & 1023;
    free(h_14);
  }
  {
    int *h_16 = malloc(4 * sizeof(int));
    for (i = 0; i < 4; i++) {
      h_16[i] = mix_mul(i, 3) ^ (v_2 & 7);
    }
    v_2 = (v_2 + *(h_16 + 1)) & 1023;
    int *hp_17 = h_16 + 3;
    v_2 = (v_2 - *hp_17) & 1023;
    free(h_16);
  }
  printf("%d %d %d\n", (int)g_11, (int)v_1, (int)v_2);
  printf("%d\n", buf_4[4]);
  return 0;
}
