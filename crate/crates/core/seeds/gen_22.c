#include <stdio.h>
#include <stdlib.h>

int g_arr0[5] = {35, 37, 1, 11, 1};
int g_arr1[8] = {19, 23, 9, 23, 16, 20, 28, 47};
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

int g_7 = 6;
int *g_ptr = g_arr0;

int func_1(int *p, int n) {
  int i;
  int acc = 13;
  for (i = 0; i < n; i++) {
    if (p[i] > (acc & 63)) {
      acc = mix_add(acc, p[i]);
    }
  }
  return acc;
}

int func_2(int *p, int n) {
  int i;
  int acc = 21;
  for (i = 0; i < n; i++) {
    if (p[i] > (acc & 63)) {
      acc = mix_add(acc, p[i]);
    }
  }
  return acc;
}

int main() {
  int i;
  short v_1 = 25;
  long v_2 = 4;
  int arr_3[6];
  for (i = 0; i < 6; i++) {
    arr_3[i] = i ^ 5;
  }
  char buf_4[7];
  for (i = 0; i < 7; i++) {
    buf_4[i] = 'a' | i;
  }
  int *p_5 = &arr_3[3];
  int *q_6;
  for (q_6 = arr_3; q_6 < arr_3 + 6; q_6++) {
    v_1 = mix_add(v_1, *q_6);
  }
  if (v_1 & 3) {
    v_2 = mix_sub(v_2, v_1);
  }
  v_2 = mix_shl(g_7, g_7);
  int *q_7;
  for (q_7 = g_arr1; q_7 < g_arr1 + 8; q_7++) {
    g_7 = mix_add(g_7, *q_7);
  }
  char *q_8;
  for (q_8 = buf_4; q_8 < buf_4 + 7; q_8++) {
    v_1 = mix_add(v_1, *q_8);
  }
  arr_3[2] = (mix_sub(v_1, *g_ptr)) & 127;
  int n_9 = 2 + (v_1 & 3);
  while (n_9 > 0) {
    v_2 = mix_add(v_2, func_2(g_arr1, 3));
    v_1 *= 9;
    v_1 &= 1023;
    *(g_ptr + 1) = (mix_add(v_2, *(p_5 + 2))) & 127;
    n_9--;
  }
  g_7 = mix_mul(g_7, 6);
  *p_5 = *(p_5 + 2);
  int *q_10;
  for (q_10 = arr_3; q_10 < arr_3 + 6; q_10++) {
    v_1 = mix_add(v_1, *q_10);
  }
  *(g_ptr + 2) = (mix_add(v_2, g_arr0[3])) & 127;
  printf("%d %d %d\n", (int)g_7, (int)v_1, (int)v_2);
  printf("%d\n", buf_4[6]);
  return 0;
}
