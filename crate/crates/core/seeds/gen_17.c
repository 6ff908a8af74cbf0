#include <stdio.h>
#include <stdlib.h>

int g_arr0[6] = {28, 39, 36, 13, 25, 13};
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

int g_36 = 8;
int *g_ptr = g_arr0;

int func_1(int *p, int n) {
  int i;
  int acc = 65;
  for (i = 0; i < n; i++) {
    acc = mix_add(acc, p[i] ^ 5);
  }
  return acc;
}

int func_2(int *p, int n) {
  int i;
  int acc = 7;
  for (i = 0; i < n; i++) {
    acc = mix_add(acc, p[i] ^ 3);
  }
  return acc;
}

int main() {
  int i;
  int v_1 = 21;
  int v_2 = 1;
  int arr_3[4];
  for (i = 0; i < 4; i++) {
    arr_3[i] = i ^ 6;
  }
  char buf_4[6];
  for (i = 0; i < 6; i++) {
    buf_4[i] = 'a' | i;
  }
  int *p_5 = &arr_3[0];
  g_36 = mix_add(v_2, *(g_ptr + 4));
  if (v_2 > g_36) {
    v_2 = mix_add(g_36, *(p_5 + 1));
    g_36 = mix_add(g_36, p_5[2]);
    g_36++;
    g_36 &= 1023;
  }
  {
    int t_6 = g_36;
    int *q_7 = &t_6;
    *q_7 = mix_add(*q_7, 10);
    g_36 = t_6;
  }
  g_arr0[0] = (mix_mul(g_36, 3)) & 127;
  v_2 = mix_add(v_2, func_2(g_arr0, 3));
  if (v_1 & 3) {
    v_1 = mix_sub(v_1, v_1);
  }
  for (i = 0; i < 6; i++) {
    buf_4[i] = mix_add(buf_4[i], v_2 ^ 3) & 127;
    v_2 = mix_add(v_2, buf_4[i]);
  }
  for (i = 0; i < 4; i++) {
    arr_3[i] = mix_add(arr_3[i], v_1 ^ 7) & 127;
    v_1 = mix_add(v_1, arr_3[i]);
  }
  arr_3[3] = (mix_add(v_1, *(p_5 + 2))) & 127;
  v_2 = mix_mul(v_2, 2);
  v_1 = mix_shl(g_36, g_36);
  v_2 = mix_shl(v_2, g_36);
  printf("%d %d %d\n", (int)g_36, (int)v_1, (int)v_2);
  printf("%d\n", buf_4[5]);
  return 0;
}
