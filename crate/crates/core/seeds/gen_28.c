#include <stdio.h>
#include <stdlib.h>

int g_arr0[6] = {34, 34, 0, 14, 20, 44};
int g_arr1[7] = {2, 31, 16, 37, 48, 8, 48};
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

int g_44 = 22;
int *g_ptr = g_arr0;

int main() {
  int i;
  int v_1 = 21;
  short v_2 = 12;
  int arr_3[3];
  for (i = 0; i < 3; i++) {
    arr_3[i] = i ^ 9;
  }
  char buf_4[9];
  for (i = 0; i < 9; i++) {
    buf_4[i] = 'a' | i;
  }
  int *p_5 = &arr_3[0];
  char *q_6;
  for (q_6 = buf_4; q_6 < buf_4 + 9; q_6++) {
    v_2 = mix_add(v_2, *q_6);
  }
  int *q_7;
  for (q_7 = g_arr1; q_7 < g_arr1 + 7; q_7++) {
    v_2 = mix_add(v_2, *q_7);
  }
  *p_5 = *(p_5 + 2);
  char *q_8;
  for (q_8 = buf_4; q_8 < buf_4 + 9; q_8++) {
    g_44 = mix_add(g_44, *q_8);
  }
  int n_9 = 2 + (v_2 & 3);
  while (n_9 > 0) {
    for (i = 0; i < 6; i++) {
      g_arr0[i] = mix_add(g_arr0[i], n_9 ^ 8) & 127;
      n_9 = mix_add(n_9, g_arr0[i]);
    }
    g_44 = mix_mul(v_1, 5);
    g_44 = mix_mul(v_1, 6);
    n_9--;
  }
  *(g_ptr + 2) = (mix_mul(g_44, 6)) & 127;
  *p_5 = (mix_add(g_44, g_arr1[6])) & 127;
  if (v_1 & 3) {
    v_1 = mix_sub(v_1, v_1);
  }
  v_2 = mix_add(v_2, buf_4[3]);
  if (g_44 <= v_1) {
    v_1 = mix_sub(g_44, *p_5);
    v_1 = mix_div(g_44, v_1);
    int *q_10;
    for (q_10 = g_arr1; q_10 < g_arr1 + 7; q_10++) {
      g_44 = mix_add(g_44, *q_10);
    }
  } else {
    {
      int t_11 = g_44;
      int *q_12 = &t_11;
      *q_12 = mix_add(*q_12, 35);
      g_44 = t_11;
    }
    v_1 = mix_add(v_1, *(g_ptr + 3));
  }
  int *q_13;
  for (q_13 = g_arr1; q_13 < g_arr1 + 7; q_13++) {
    v_1 = mix_add(v_1, *q_13);
  }
  v_1 = mix_sub(v_1, g_44);
  g_44 = mix_add(g_44, g_ptr[2]);
  g_44 = mix_add(g_44, v_2);
  printf("%d %d %d\n", (int)g_44, (int)v_1, (int)v_2);
  printf("%d\n", buf_4[8]);
  return 0;
}
