#include <stdio.h>
#include <stdlib.h>

struct rec {
  int key;
  int vals[3];
  long total;
};

struct rec recs[3];
int g_arr0[6] = {44, 20, 5, 37, 44, 47};
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

int g_88 = 25;
int *g_ptr = g_arr0;

int main() {
  int i;
  short v_1 = 39;
  short v_2 = 18;
  int v_3 = 31;
  int arr_4[5];
  for (i = 0; i < 5; i++) {
    arr_4[i] = i ^ 9;
  }
  char buf_5[6];
  for (i = 0; i < 6; i++) {
    buf_5[i] = 'a' | i;
  }
  int *p_6 = &arr_4[0];
  struct rec *r_7 = &recs[1];
  r_7->key = v_1 % 100;
  r_7->vals[2] = r_7->key + 1;
  r_7->total = r_7->vals[2] * 3;
  int *rp_8 = r_7->vals;
  *(g_ptr + 4) = (mix_add(v_2, v_1)) & 127;
  g_88 = mix_add(v_3, buf_5[3]);
  v_3 = mix_add(v_1, *(g_ptr + 2));
  p_6 = &g_arr0[5];
  if (v_3 <= g_88) {
    *g_ptr = *(g_ptr + 1);
    g_ptr = &g_arr0[3];
    g_88 = mix_add(v_3, v_3);
  } else {
    v_2 = mix_div(v_2, v_2);
    *rp_8 = *(rp_8 + 1);
  }
  *g_ptr = *(g_ptr + 1);
  {
    int t_9 = g_88;
    int *q_10 = &t_9;
    *q_10 = mix_add(*q_10, 35);
    g_88 = t_9;
  }
  int n_11 = 2 + (v_2 & 3);
  while (n_11 > 0) {
    v_2 = mix_add(v_2, g_ptr[2]);
    buf_5[1] = (mix_mul(v_1, 2)) & 127;
    v_2 = mix_shl(v_3, v_3);
    n_11--;
  }
  if (v_2 <= v_1) {
    g_88 = mix_mul(g_88, *p_6);
    v_2++;
    v_2 &= 1023;
    if (v_3 & 3) {
      g_88 = mix_sub(g_88, v_3);
    }
  } else {
    g_88 = mix_shl(v_1, v_1);
    v_1 = mix_add(v_1, v_1);
  }
  int n_12 = 2 + (g_88 & 3);
  while (n_12 > 0) {
    char *q_13;
    for (q_13 = buf_5; q_13 < buf_5 + 6; q_13++) {
      n_12 = mix_add(n_12, *q_13);
    }
    int *q_14;
    for (q_14 = arr_4; q_14 < arr_4 + 5; q_14++) {
      v_3 = mix_add(v_3, *q_14);
    }
    g_arr0[3] = (mix_mul(v_3, 9)) & 127;
    n_12--;
  }
  v_1 = mix_sub(v_1, g_88);
  printf("%d %d %d %d\n", (int)g_88, (int)v_1, (int)v_2, (int)v_3);
  printf("%d\n", buf_5[5]);
  return 0;
}
