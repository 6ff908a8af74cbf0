#include <stdio.h>
#include <stdlib.h>

struct rec {
  int key;
  int vals[3];
  long total;
};

struct rec recs[3];
int g_arr0[8] = {21, 12, 19, 34, 29, 8, 40, 44};
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

int g_41 = 17;
int *g_ptr = g_arr0;

int main() {
  int i;
  long v_1 = 6;
  long v_2 = 28;
  short v_3 = 33;
  int arr_4[4];
  for (i = 0; i < 4; i++) {
    arr_4[i] = i ^ 6;
  }
  char buf_5[6];
  for (i = 0; i < 6; i++) {
    buf_5[i] = 'a' | i;
  }
  int *p_6 = &arr_4[3];
  struct rec *r_7 = &recs[1];
  r_7->key = v_2 % 100;
  r_7->vals[2] = r_7->key + 1;
  r_7->total = r_7->vals[2] * 3;
  int *rp_8 = r_7->vals;
  v_3 = mix_add(v_2, *(g_ptr + 1));
  {
    int t_9 = v_3;
    int *q_10 = &t_9;
    *q_10 = mix_add(*q_10, 36);
    v_3 = t_9;
  }
  if (v_3 == v_1) {
    arr_4[2] = (mix_shl(v_1, g_41)) & 127;
    v_1 = mix_add(v_3, *(g_ptr + 3));
    v_3 = mix_add(v_1, g_41);
  }
  v_2 = mix_add(v_3, buf_5[5]);
  g_41 = mix_add(g_41, rp_8[1]);
  v_2 = mix_add(v_3, v_1);
  v_2 = mix_sub(v_3, *rp_8);
  char *q_11;
  for (q_11 = buf_5; q_11 < buf_5 + 6; q_11++) {
    v_2 = mix_add(v_2, *q_11);
  }
  if (v_2 == v_2) {
    v_1 = mix_add(v_2, arr_4[2]);
    v_2 = mix_sub(v_3, *rp_8);
    v_1 = mix_add(v_1, arr_4[0]);
  } else {
    v_3 = mix_add(g_41, buf_5[3]);
    buf_5[1] = (mix_shl(g_41, g_41)) & 127;
  }
  g_41 = mix_div(v_1, v_3);
  v_3 = mix_sub(g_41, v_1);
  printf("%d %d %d %d\n", (int)g_41, (int)v_1, (int)v_2, (int)v_3);
  printf("%d\n", buf_5[5]);
  return 0;
}
