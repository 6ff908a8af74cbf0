#include <stdio.h>
#include <stdlib.h>

int g_arr0[3] = {43, 32, 4};
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

int g_7 = 21;
int *g_ptr = g_arr0;

int main() {
  int i;
  int v_1 = 6;
  short v_2 = 37;
  long v_3 = 25;
  int arr_4[3];
  for (i = 0; i < 3; i++) {
    arr_4[i] = i ^ 5;
  }
  char buf_5[5];
  for (i = 0; i < 5; i++) {
    buf_5[i] = 'a' | i;
  }
  int *p_6 = &arr_4[1];
  int n_7 = 2 + (g_7 & 3);
  while (n_7 > 0) {
    v_3 += 3;
    v_3 &= 1023;
    *g_ptr = *(g_ptr + 1);
    {
      int t_8 = v_2;
      int *q_9 = &t_8;
      *q_9 = mix_add(*q_9, 11);
      v_2 = t_8;
    }
    n_7--;
  }
  for (i = 0; i < 5; i++) {
    buf_5[i] = mix_add(buf_5[i], v_2 ^ 9) & 127;
    v_2 = mix_add(v_2, buf_5[i]);
  }
  int *q_10;
  for (q_10 = arr_4; q_10 < arr_4 + 3; q_10++) {
    v_1 = mix_add(v_1, *q_10);
  }
  int *q_11;
  for (q_11 = g_arr0; q_11 < g_arr0 + 3; q_11++) {
    g_7 = mix_add(g_7, *q_11);
  }
  for (i = 0; i < 3; i++) {
    g_arr0[i] = mix_add(g_arr0[i], v_2 ^ 5) & 127;
    v_2 = mix_add(v_2, g_arr0[i]);
  }
  arr_4[0] = (mix_add(v_2, *(g_ptr + 1))) & 127;
  int n_12 = 2 + (v_1 & 3);
  while (n_12 > 0) {
    g_7 = mix_div(g_7, v_1);
    int *q_13;
    for (q_13 = g_arr0; q_13 < g_arr0 + 3; q_13++) {
      v_1 = mix_add(v_1, *q_13);
    }
    n_12 = mix_sub(g_7, g_7);
    n_12--;
  }
  g_7 = mix_div(g_7, g_7);
  v_3 = mix_add(v_3, *(p_6 + 1));
  v_1 = mix_add(g_7, buf_5[4]);
  v_2 = mix_shl(v_1, v_3);
  g_7 = mix_add(g_7, v_2);
  if (g_7 & 3) {
    v_3 = mix_sub(v_3, g_7);
  }
  printf("%d %d %d %d\n", (int)g_7, (int)v_1, (int)v_2, (int)v_3);
  printf("%d\n", buf_5[4]);
  return 0;
}
