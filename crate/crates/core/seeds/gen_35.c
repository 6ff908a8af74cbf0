#include <stdio.h>
#include <stdlib.h>

int g_arr0[7] = {24, 0, 24, 40, 5, 17, 4};
int g_arr1[4] = {31, 9, 43, 39};
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

int g_9 = 4;
int *g_ptr = g_arr0;

int func_1(int *p, int n) {
  int i;
  int acc = 84;
  for (i = 0; i < n; i++) {
    acc = mix_add(acc, p[i] ^ 9);
  }
  return acc;
}

int func_2(int *p, int n) {
  int i;
  int acc = 90;
  for (i = 0; i < n; i++) {
    acc = mix_add(acc, p[i] ^ 1);
  }
  return acc;
}

int main() {
  int i;
  short v_1 = 21;
  long v_2 = 3;
  long v_3 = 14;
  int arr_4[4];
  for (i = 0; i < 4; i++) {
    arr_4[i] = i ^ 5;
  }
  char buf_5[6];
  for (i = 0; i < 6; i++) {
    buf_5[i] = 'a' | i;
  }
  int *p_6 = &arr_4[1];
  char *q_7;
  for (q_7 = buf_5; q_7 < buf_5 + 6; q_7++) {
    v_3 = mix_add(v_3, *q_7);
  }
  int *q_8;
  for (q_8 = g_arr1; q_8 < g_arr1 + 4; q_8++) {
    g_9 = mix_add(g_9, *q_8);
  }
  int *q_9;
  for (q_9 = g_arr1; q_9 < g_arr1 + 4; q_9++) {
    g_9 = mix_add(g_9, *q_9);
  }
  g_arr1[3] = (mix_sub(v_3, *g_ptr)) & 127;
  {
    int t_10 = v_1;
    int *q_11 = &t_10;
    *q_11 = mix_add(*q_11, 12);
    v_1 = t_10;
  }
  v_1 = mix_sub(v_3, v_3);
  v_3 = mix_add(g_9, buf_5[4]);
  p_6 = &arr_4[0];
  g_ptr = &g_arr0[6];
  g_9 = mix_sub(v_3, v_1);
  g_ptr = &g_arr1[2];
  v_3 = mix_add(v_3, func_2(g_arr1, 2));
  printf("%d %d %d %d\n", (int)g_9, (int)v_1, (int)v_2, (int)v_3);
  printf("%d\n", buf_5[5]);
  return 0;
}
