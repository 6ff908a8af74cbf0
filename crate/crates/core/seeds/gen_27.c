#include <stdio.h>
#include <stdlib.h>

struct rec {
  int key;
  int vals[3];
  long total;
};

struct rec recs[3];
int g_arr0[8] = {8, 1, 2, 25, 17, 22, 10, 29};
int g_arr1[8] = {18, 35, 23, 19, 6, 38, 42, 10};
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

int g_35 = 3;
int *g_ptr = g_arr0;

int main() {
  int i;
  short v_1 = 22;
  long v_2 = 16;
  int arr_3[3];
  for (i = 0; i < 3; i++) {
    arr_3[i] = i ^ 6;
  }
  char buf_4[4];
  for (i = 0; i < 4; i++) {
    buf_4[i] = 'a' | i;
  }
  int *p_5 = &arr_3[1];
  struct rec *r_6 = &recs[1];
  r_6->key = v_2 % 100;
  r_6->vals[2] = r_6->key + 1;
  r_6->total = r_6->vals[2] * 3;
  int *rp_7 = r_6->vals;
  v_2 = mix_add(v_2, *(rp_7 + 2));
  for (i = 0; i < 3; i++) {
    arr_3[i] = mix_add(arr_3[i], v_2 ^ 5) & 127;
    v_2 = mix_add(v_2, arr_3[i]);
  }
  v_1 = mix_shl(v_2, g_35);
  char *q_8;
  for (q_8 = buf_4; q_8 < buf_4 + 4; q_8++) {
    v_2 = mix_add(v_2, *q_8);
  }
  g_35 *= 5;
  g_35 &= 1023;
  v_2 *= 5;
  v_2 &= 1023;
  v_1 = mix_add(v_2, v_2);
  if (v_1 > g_35) {
    g_35 *= 3;
    g_35 &= 1023;
    *(g_ptr + 4) = (mix_div(v_2, g_35)) & 127;
    v_1 += 6;
    v_1 &= 1023;
  } else {
    for (i = 0; i < 8; i++) {
      g_arr1[i] = mix_add(g_arr1[i], g_35 ^ 1) & 127;
      g_35 = mix_add(g_35, g_arr1[i]);
    }
    v_1 = mix_add(v_1, *(rp_7 + 2));
  }
  v_1 = mix_add(v_1, p_5[1]);
  printf("%d %d %d\n", (int)g_35, (int)v_1, (int)v_2);
  printf("%d\n", buf_4[3]);
  return 0;
}
