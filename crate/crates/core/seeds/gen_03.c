#include <stdio.h>
#include <stdlib.h>

int g_arr0[8] = {16, 4, 39, 40, 15, 10, 34, 28};
int g_arr1[7] = {12, 35, 40, 12, 46, 23, 37};
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

int g_96 = 24;
int *g_ptr = g_arr0;

int main() {
  int i;
  long v_1 = 9;
  int v_2 = 24;
  long v_3 = 36;
  int arr_4[6];
  for (i = 0; i < 6; i++) {
    arr_4[i] = i ^ 5;
  }
  char buf_5[7];
  for (i = 0; i < 7; i++) {
    buf_5[i] = 'a' | i;
  }
  int *p_6 = &arr_4[4];
  int *q_7;
  for (q_7 = g_arr1; q_7 < g_arr1 + 7; q_7++) {
    v_2 = mix_add(v_2, *q_7);
  }
  int *q_8;
  for (q_8 = g_arr1; q_8 < g_arr1 + 7; q_8++) {
    v_1 = mix_add(v_1, *q_8);
  }
  v_2 = mix_sub(v_3, *p_6);
  g_ptr = &g_arr1[4];
  buf_5[1] = (mix_div(v_3, v_1)) & 127;
  *p_6 = *(p_6 + 1);
  v_3 = mix_add(g_96, arr_4[0]);
  int *q_9;
  for (q_9 = g_arr1; q_9 < g_arr1 + 7; q_9++) {
    v_3 = mix_add(v_3, *q_9);
  }
  int *q_10;
  for (q_10 = arr_4; q_10 < arr_4 + 6; q_10++) {
    v_2 = mix_add(v_2, *q_10);
  }
  v_3 = mix_div(v_3, v_1);
  *(g_ptr + 2) = (mix_div(v_2, v_1)) & 127;
  for (i = 0; i < 7; i++) {
    buf_5[i] = mix_add(buf_5[i], v_3 ^ 5) & 127;
    v_3 = mix_add(v_3, buf_5[i]);
  }
  printf("%d %d %d %d\n", (int)g_96, (int)v_1, (int)v_2, (int)v_3);
  printf("%d\n", buf_5[6]);
  return 0;
}
