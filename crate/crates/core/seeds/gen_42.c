#include <stdio.h>
#include <stdlib.h>

int g_arr0[7] = {21, 17, 31, 14, 32, 7, 15};
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

int g_16 = 24;
int *g_ptr = g_arr0;

int func_1(int *p, int n) {
  int i;
  int acc = 53;
  for (i = 0; i < n; i++) {
    acc = mix_add(mix_mul(acc, 3), *(p + i));
  }
  return acc;
}

int func_2(int *p, int n) {
  int i;
  int acc = 58;
  for (i = 0; i < n; i++) {
    if (p[i] > (acc & 63)) {
      acc = mix_add(acc, p[i]);
    }
  }
  return acc;
}

int main() {
  int i;
  int v_1 = 29;
  long v_2 = 7;
  int v_3 = 4;
  int arr_4[6];
  for (i = 0; i < 6; i++) {
    arr_4[i] = i ^ 3;
  }
  char buf_5[6];
  for (i = 0; i < 6; i++) {
    buf_5[i] = 'a' | i;
  }
  int *p_6 = &arr_4[2];
  int *q_7;
  for (q_7 = arr_4; q_7 < arr_4 + 6; q_7++) {
    v_2 = mix_add(v_2, *q_7);
  }
  if (v_3 & 3) {
    g_16 = mix_sub(g_16, v_3);
  }
  for (i = 0; i < 6; i++) {
    buf_5[i] = mix_add(buf_5[i], g_16 ^ 1) & 127;
    g_16 = mix_add(g_16, buf_5[i]);
  }
  int n_8 = 2 + (g_16 & 3);
  while (n_8 > 0) {
    v_3 = mix_add(n_8, *(p_6 + 3));
    n_8 += 6;
    n_8 &= 1023;
    v_3 = mix_add(v_3, func_1(g_arr0, 6));
    n_8--;
  }
  v_2 = mix_add(v_2, g_ptr[2]);
  v_2 = mix_add(v_2, func_2(g_arr0, 2));
  int *q_9;
  for (q_9 = arr_4; q_9 < arr_4 + 6; q_9++) {
    v_2 = mix_add(v_2, *q_9);
  }
  p_6 = &arr_4[5];
  v_3 = mix_add(v_3, func_1(arr_4, 6));
  {
    int *h_10 = malloc(6 * sizeof(int));
    for (i = 0; i < 6; i++) {
      h_10[i] = mix_mul(i, 4) ^ (v_1 & 7);
    }
    v_1 = (v_1 + *(h_10 + 0)) & 1023;
    int *hp_11 = h_10 + 5;
    v_1 = (v_1 - *hp_11) & 1023;
    free(h_10);
  }
  printf("%d %d %d %d\n", (int)g_16, (int)v_1, (int)v_2, (int)v_3);
  printf("%d\n", buf_5[5]);
  return 0;
}
