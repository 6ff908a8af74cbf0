#include <stdio.h>
#include <stdlib.h>

int g_arr0[4] = {38, 9, 26, 17};
int g_arr1[7] = {48, 40, 8, 22, 27, 9, 28};
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

int g_64 = 19;
int *g_ptr = g_arr0;

int func_1(int *p, int n) {
  int i;
  int acc = 50;
  for (i = 0; i < n; i++) {
    acc = mix_add(mix_mul(acc, 6), *(p + i));
  }
  return acc;
}

int main() {
  int i;
  short v_1 = 6;
  short v_2 = 25;
  int v_3 = 20;
  int arr_4[4];
  for (i = 0; i < 4; i++) {
    arr_4[i] = i ^ 3;
  }
  char buf_5[7];
  for (i = 0; i < 7; i++) {
    buf_5[i] = 'a' | i;
  }
  int *p_6 = &arr_4[0];
  if (v_2 & 3) {
    v_2 = mix_sub(v_2, v_2);
  }
  if (v_1 & 3) {
    g_64 = mix_sub(g_64, v_1);
  }
  v_2 = mix_mul(v_3, 3);
  v_1 = mix_div(g_64, v_3);
  *(p_6 + 3) = (mix_add(v_3, v_2)) & 127;
  {
    int t_7 = v_3;
    int *q_8 = &t_7;
    *q_8 = mix_add(*q_8, 32);
    v_3 = t_7;
  }
  v_3 = mix_mul(v_1, 3);
  g_64 -= 7;
  g_64 &= 1023;
  v_1 = mix_add(v_1, p_6[0]);
  int *q_9;
  for (q_9 = arr_4; q_9 < arr_4 + 4; q_9++) {
    v_1 = mix_add(v_1, *q_9);
  }
  printf("%d %d %d %d\n", (int)g_64, (int)v_1, (int)v_2, (int)v_3);
  printf("%d\n", buf_5[6]);
  return 0;
}
