#include <stdio.h>
#include <stdlib.h>

int g_arr0[8] = {38, 14, 9, 3, 43, 15, 3, 44};
int g_arr1[8] = {31, 2, 46, 13, 43, 42, 32, 35};
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

int g_33 = 13;
int *g_ptr = g_arr0;

int func_1(int *p, int n) {
  int i;
  int acc = 9;
  for (i = 0; i < n; i++) {
    if (p[i] > (acc & 63)) {
      acc = mix_add(acc, p[i]);
    }
  }
  return acc;
}

int func_2(int *p, int n) {
  int i;
  int acc = 1;
  for (i = 0; i < n; i++) {
    acc = mix_add(mix_mul(acc, 1), *(p + i));
  }
  return acc;
}

int main() {
  int i;
  short v_1 = 26;
  int v_2 = 36;
  int v_3 = 31;
  int arr_4[6];
  for (i = 0; i < 6; i++) {
    arr_4[i] = i ^ 9;
  }
  char buf_5[8];
  for (i = 0; i < 8; i++) {
    buf_5[i] = 'a' | i;
  }
  int *p_6 = &arr_4[0];
  int *q_7;
  for (q_7 = arr_4; q_7 < arr_4 + 6; q_7++) {
    g_33 = mix_add(g_33, *q_7);
  }
  *(p_6 + 5) = (mix_div(v_1, v_2)) & 127;
  v_1 = mix_mul(g_33, 5);
  *g_ptr = *(g_ptr + 7);
  for (i = 0; i < 6; i++) {
    arr_4[i] = mix_add(arr_4[i], g_33 ^ 8) & 127;
    g_33 = mix_add(g_33, arr_4[i]);
  }
  v_3 = mix_add(v_3, func_2(g_arr0, 5));
  if (v_1 <= g_33) {
    g_33 = mix_add(g_33, p_6[1]);
    g_33 = mix_add(g_33, func_2(g_arr0, 3));
    v_2 = mix_mul(g_33, 8);
  }
  char *q_8;
  for (q_8 = buf_5; q_8 < buf_5 + 8; q_8++) {
    g_33 = mix_add(g_33, *q_8);
  }
  v_1 = mix_add(v_2, g_33);
  {
    int t_9 = v_3;
    int *q_10 = &t_9;
    *q_10 = mix_add(*q_10, 38);
    v_3 = t_9;
  }
  printf("%d %d %d %d\n", (int)g_33, (int)v_1, (int)v_2, (int)v_3);
  printf("%d\n", buf_5[7]);
  return 0;
}
