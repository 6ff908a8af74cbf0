#include <stdio.h>
#include <stdlib.h>

int g_arr0[7] = {29, 22, 46, 28, 24, 18, 39};
int g_arr1[7] = {42, 25, 1, 24, 27, 7, 25};
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

int g_45 = 27;
int *g_ptr = g_arr0;

int func_1(int *p, int n) {
  int i;
  int acc = 96;
  for (i = 0; i < n; i++) {
    if (p[i] > (acc & 63)) {
      acc = mix_add(acc, p[i]);
    }
  }
  return acc;
}

int main() {
  int i;
  short v_1 = 1;
  long v_2 = 3;
  int arr_3[4];
  for (i = 0; i < 4; i++) {
    arr_3[i] = i ^ 1;
  }
  char buf_4[4];
  for (i = 0; i < 4; i++) {
    buf_4[i] = 'a' | i;
  }
  int *p_5 = &arr_3[2];
  v_1 = mix_add(v_1, func_1(g_arr1, 5));
  if (v_2 & 3) {
    v_2 = mix_sub(v_2, v_2);
  }
  arr_3[1] = (mix_add(v_1, *(p_5 + 1))) & 127;
  if (v_2 == v_2) {
    int *q_6;
    for (q_6 = g_arr1; q_6 < g_arr1 + 7; q_6++) {
      v_1 = mix_add(v_1, *q_6);
    }
    g_arr0[5] = (mix_sub(v_1, v_1)) & 127;
    int *q_7;
    for (q_7 = g_arr0; q_7 < g_arr0 + 7; q_7++) {
      v_2 = mix_add(v_2, *q_7);
    }
  }
  int n_8 = 2 + (g_45 & 3);
  while (n_8 > 0) {
    v_2 = mix_shl(n_8, v_2);
    g_45 = mix_div(v_1, g_45);
    v_2 = mix_add(v_2, g_ptr[5]);
    n_8--;
  }
  g_45 = mix_add(g_45, g_ptr[1]);
  v_2 -= 5;
  v_2 &= 1023;
  if (v_1 < v_2) {
    g_45 = mix_mul(g_45, 5);
    g_45 = mix_add(v_1, buf_4[1]);
    v_2 = mix_add(v_2, func_1(g_arr0, 6));
  } else {
    *(p_5 + 1) = (mix_add(g_45, *(g_ptr + 1))) & 127;
    v_1 = mix_add(v_1, func_1(arr_3, 3));
  }
  {
    int *h_9 = malloc(3 * sizeof(int));
    for (i = 0; i < 3; i++) {
      h_9[i] = mix_mul(i, 4) ^ (v_1 & 7);
    }
    v_1 = (v_1 + *(h_9 + 1)) & 1023;
    int *hp_10 = h_9 + 2;
    v_1 = (v_1 - *hp_10) & 1023;
    free(h_9);
  }
  for (i = 0; i < 4; i++) {
    arr_3[i] = mix_add(arr_3[i], v_2 ^ 3) & 127;
    v_2 = mix_add(v_2, arr_3[i]);
  }
  g_45 *= 2;
  g_45 &= 1023;
  int *q_11;
  for (q_11 = g_arr0; q_11 < g_arr0 + 7; q_11++) {
    g_45 = mix_add(g_45, *q_11);
  }
  buf_4[3] = (mix_add(g_45, v_2)) & 127;
  printf("%d %d %d\n", (int)g_45, (int)v_1, (int)v_2);
  printf("%d\n", buf_4[3]);
  return 0;
}
