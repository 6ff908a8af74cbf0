#include <stdio.h>
#include <stdlib.h>

struct rec {
  int key;
  int vals[3];
  long total;
};

struct rec recs[3];
int g_arr0[3] = {18, 8, 5};
int g_arr1[4] = {2, 25, 0, 14};
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

int g_76 = 3;
int *g_ptr = g_arr0;

int func_1(int *p, int n) {
  int i;
  int acc = 9;
  for (i = 0; i < n; i++) {
    acc = mix_add(mix_mul(acc, 2), *(p + i));
  }
  return acc;
}

int main() {
  int i;
  int v_1 = 13;
  int v_2 = 21;
  int v_3 = 3;
  int arr_4[5];
  for (i = 0; i < 5; i++) {
    arr_4[i] = i ^ 5;
  }
  char buf_5[4];
  for (i = 0; i < 4; i++) {
    buf_5[i] = 'a' | i;
  }
  int *p_6 = &arr_4[3];
  struct rec *r_7 = &recs[1];
  r_7->key = v_3 % 100;
  r_7->vals[2] = r_7->key + 1;
  r_7->total = r_7->vals[2] * 3;
  int *rp_8 = r_7->vals;
  g_76 = mix_shl(v_1, v_1);
  v_2 = mix_add(v_2, v_3);
  *g_ptr = (mix_mul(g_76, 6)) & 127;
  v_3 = mix_add(g_76, v_1);
  v_3 += 9;
  v_3 &= 1023;
  g_76 = mix_add(v_2, v_3);
  v_1 = mix_sub(v_1, v_1);
  arr_4[2] = (mix_add(v_3, g_76)) & 127;
  if (v_2 & 3) {
    v_3 = mix_sub(v_3, v_2);
  }
  g_76 = mix_shl(g_76, v_2);
  {
    int t_9 = g_76;
    int *q_10 = &t_9;
    *q_10 = mix_add(*q_10, 19);
    g_76 = t_9;
  }
  if (v_2 < g_76) {
    g_76 = mix_shl(v_3, v_3);
    g_ptr = &arr_4[4];
    v_1 = mix_sub(g_76, *rp_8);
  } else {
    v_3 = mix_sub(g_76, *p_6);
    v_3 = mix_add(v_2, *(p_6 + 1));
  }
  int n_11 = 2 + (v_3 & 3);
  while (n_11 > 0) {
    if (n_11 & 3) {
      v_3 = mix_sub(v_3, n_11);
    }
    if (g_76 & 3) {
      v_2 = mix_sub(v_2, g_76);
    }
    v_1 = mix_add(v_1, func_1(g_arr0, 3));
    n_11--;
  }
  printf("%d %d %d %d\n", (int)g_76, (int)v_1, (int)v_2, (int)v_3);
  printf("%d\n", buf_5[3]);
  return 0;
}
