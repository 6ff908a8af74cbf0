#include <stdio.h>
#include <stdlib.h>

struct rec {
  int key;
  int vals[3];
  long total;
};

struct rec recs[3];
int g_arr0[3] = {48, 41, 6};
int g_arr1[3] = {43, 38, 2};
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

int g_17 = 15;
int *g_ptr = g_arr0;

int func_1(int *p, int n) {
  int i;
  int acc = 19;
  for (i = 0; i < n; i++) {
    if (p[i] > (acc & 63)) {
      acc = mix_add(acc, p[i]);
    }
  }
  return acc;
}

int main() {
  int i;
  short v_1 = 32;
  long v_2 = 15;
  int arr_3[5];
  for (i = 0; i < 5; i++) {
    arr_3[i] = i ^ 6;
  }
  char buf_4[6];
  for (i = 0; i < 6; i++) {
    buf_4[i] = 'a' | i;
  }
  int *p_5 = &arr_3[1];
  struct rec *r_6 = &recs[1];
  r_6->key = v_1 % 100;
  r_6->vals[2] = r_6->key + 1;
  r_6->total = r_6->vals[2] * 3;
  int *rp_7 = r_6->vals;
  if (v_1 == v_2) {
    {
      int *h_8 = malloc(3 * sizeof(int));
      for (i = 0; i < 3; i++) {
        h_8[i] = mix_mul(i, 3) ^ (v_2 & 7);
      }
      v_2 = (v_2 + *(h_8 + 0)) & 1023;
      int *hp_9 = h_8 + 2;
      v_2 = (v_2 - *hp_9) & 1023;
      free(h_8);
    }
    {
      int t_10 = v_1;
      int *q_11 = &t_10;
      *q_11 = mix_add(*q_11, 41);
      v_1 = t_10;
    }
    {
      int *h_12 = malloc(5 * sizeof(int));
      for (i = 0; i < 5; i++) {
        h_12[i] = mix_mul(i, 2) ^ (g_17 & 7);
      }
      g_17 = (g_17 + *(h_12 + 0)) & 1023;
      int *hp_13 = h_12 + 4;
      g_17 = (g_17 - *hp_13) & 1023;
      free(h_12);
    }
  } else {
    *rp_7 = (mix_add(g_17, *(p_5 + 2))) & 127;
    *rp_7 = *(rp_7 + 1);
  }
  v_2 = mix_mul(v_1, 9);
  g_17 = mix_add(g_17, arr_3[1]);
  if (v_2 > g_17) {
    {
      int t_14 = v_1;
      int *q_15 = &t_14;
      *q_15 = mix_add(*q_15, 2);
      v_1 = t_14;
    }
    v_1 = mix_add(v_1, v_1);
    v_1 = mix_sub(v_1, v_1);
  }
  int *q_16;
  for (q_16 = arr_3; q_16 < arr_3 + 5; q_16++) {
    v_2 = mix_add(v_2, *q_16);
  }
  for (i = 0; i < 3; i++) {
    g_arr1[i] = mix_add(g_arr1[i], v_2 ^ 4) & 127;
    v_2 = mix_add(v_2, g_arr1[i]);
  }
  v_2 = mix_add(g_17, arr_3[4]);
  v_2 = mix_add(v_2, func_1(g_arr1, 2));
  *p_5 = *(p_5 + 1);
  printf("%d %d %d\n", (int)g_17, (int)v_1, (int)v_2);
  printf("%d\n", buf_4[5]);
  return 0;
}
