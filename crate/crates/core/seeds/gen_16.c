#include <stdio.h>
#include <stdlib.h>

struct rec {
  int key;
  int vals[3];
  long total;
};

struct rec recs[3];
int g_arr0[3] = {40, 7, 11};
int g_arr1[6] = {17, 26, 23, 31, 44, 8};
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

int g_66 = 20;
int *g_ptr = g_arr0;

int func_1(int *p, int n) {
  int i;
  int acc = 94;
  for (i = 0; i < n; i++) {
    acc = mix_add(mix_mul(acc, 2), *(p + i));
  }
  return acc;
}

int func_2(int *p, int n) {
  int i;
  int acc = 10;
  for (i = 0; i < n; i++) {
    if (p[i] > (acc & 63)) {
      acc = mix_add(acc, p[i]);
    }
  }
  return acc;
}

int main() {
  int i;
  int v_1 = 7;
  int v_2 = 2;
  int arr_3[4];
  for (i = 0; i < 4; i++) {
    arr_3[i] = i ^ 3;
  }
  char buf_4[6];
  for (i = 0; i < 6; i++) {
    buf_4[i] = 'a' | i;
  }
  int *p_5 = &arr_3[1];
  struct rec *r_6 = &recs[1];
  r_6->key = v_2 % 100;
  r_6->vals[2] = r_6->key + 1;
  r_6->total = r_6->vals[2] * 3;
  int *rp_7 = r_6->vals;
  char *q_8;
  for (q_8 = buf_4; q_8 < buf_4 + 6; q_8++) {
    v_1 = mix_add(v_1, *q_8);
  }
  g_arr1[0] = (mix_add(v_1, *(g_ptr + 1))) & 127;
  rp_7 = &g_arr1[1];
  if (g_66 & 3) {
    v_1 = mix_sub(v_1, g_66);
  }
  *g_ptr = *(g_ptr + 2);
  int n_9 = 2 + (v_1 & 3);
  while (n_9 > 0) {
    for (i = 0; i < 3; i++) {
      g_arr0[i] = mix_add(g_arr0[i], n_9 ^ 2) & 127;
      n_9 = mix_add(n_9, g_arr0[i]);
    }
    {
      int t_10 = g_66;
      int *q_11 = &t_10;
      *q_11 = mix_add(*q_11, 46);
      g_66 = t_10;
    }
    n_9 = mix_shl(g_66, v_2);
    n_9--;
  }
  *g_ptr = *(g_ptr + 1);
  int *q_12;
  for (q_12 = arr_3; q_12 < arr_3 + 4; q_12++) {
    v_1 = mix_add(v_1, *q_12);
  }
  char *q_13;
  for (q_13 = buf_4; q_13 < buf_4 + 6; q_13++) {
    v_2 = mix_add(v_2, *q_13);
  }
  v_2 = mix_add(v_2, g_ptr[2]);
  if (v_2 & 3) {
    v_1 = mix_sub(v_1, v_2);
  }
  if (g_66 != v_2) {
    {
      int t_14 = g_66;
      int *q_15 = &t_14;
      *q_15 = mix_add(*q_15, 49);
      g_66 = t_14;
    }
    v_1 = mix_add(g_66, *(g_ptr + 2));
    for (i = 0; i < 3; i++) {
      g_arr0[i] = mix_add(g_arr0[i], v_1 ^ 5) & 127;
      v_1 = mix_add(v_1, g_arr0[i]);
    }
  }
  g_66 = mix_add(g_66, g_ptr[0]);
  for (i = 0; i < 3; i++) {
    g_arr0[i] = mix_add(g_arr0[i], v_2 ^ 3) & 127;
    v_2 = mix_add(v_2, g_arr0[i]);
  }
  printf("%d %d %d\n", (int)g_66, (int)v_1, (int)v_2);
  printf("%d\n", buf_4[5]);
  return 0;
}
