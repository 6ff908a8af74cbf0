#include <stdio.h>
#include <stdlib.h>

int g_arr0[6] = {28, 12, 27, 25, 47, 3};
int g_arr1[7] = {46, 23, 34, 2, 44, 46, 33};
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

int g_80 = 23;
int *g_ptr = g_arr0;

int func_1(int *p, int n) {
  int i;
  int acc = 44;
  for (i = 0; i < n; i++) {
    acc = mix_add(acc, p[i] ^ 4);
  }
  return acc;
}

int main() {
  int i;
  long v_1 = 21;
  int v_2 = 34;
  int arr_3[6];
  for (i = 0; i < 6; i++) {
    arr_3[i] = i ^ 6;
  }
  char buf_4[7];
  for (i = 0; i < 7; i++) {
    buf_4[i] = 'a' | i;
  }
  int *p_5 = &arr_3[0];
  {
    int t_6 = g_80;
    int *q_7 = &t_6;
    *q_7 = mix_add(*q_7, 17);
    g_80 = t_6;
  }
  {
    int t_8 = v_1;
    int *q_9 = &t_8;
    *q_9 = mix_add(*q_9, 49);
    v_1 = t_8;
  }
  v_2 = mix_add(v_2, g_ptr[4]);
  v_1 = mix_mul(g_80, 2);
  int n_10 = 2 + (g_80 & 3);
  while (n_10 > 0) {
    v_2 = mix_add(v_2, n_10);
    v_2 = mix_add(v_2, p_5[3]);
    v_2 = mix_sub(g_80, v_2);
    n_10--;
  }
  v_2 = mix_sub(g_80, v_1);
  v_2 = mix_add(v_2, g_ptr[0]);
  int *q_11;
  for (q_11 = g_arr0; q_11 < g_arr0 + 6; q_11++) {
    v_1 = mix_add(v_1, *q_11);
  }
  v_2 = mix_add(v_2, g_ptr[2]);
  *g_ptr = *(g_ptr + 5);
  if (v_1 != v_1) {
    int *q_12;
    for (q_12 = g_arr0; q_12 < g_arr0 + 6; q_12++) {
      v_1 = mix_add(v_1, *q_12);
    }
    g_80 = mix_add(v_2, *(g_ptr + 2));
    g_80 = mix_sub(g_80, *g_ptr);
  }
  for (i = 0; i < 6; i++) {
    g_arr0[i] = mix_add(g_arr0[i], v_2 ^ 1) & 127;
    v_2 = mix_add(v_2, g_arr0[i]);
  }
  g_80 = mix_mul(v_2, 5);
  v_2 = mix_add(v_2, func_1(g_arr0, 3));
  *p_5 = *(p_5 + 3);
  printf("%d %d %d\n", (int)g_80, (int)v_1, (int)v_2);
  printf("%d\n", buf_4[6]);
  return 0;
}
