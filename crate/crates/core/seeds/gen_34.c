#include <stdio.h>
#include <stdlib.h>

int g_arr0[6] = {47, 38, 36, 4, 1, 3};
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

int g_37 = 4;
int *g_ptr = g_arr0;

int func_1(int *p, int n) {
  int i;
  int acc = 59;
  for (i = 0; i < n; i++) {
    acc = mix_add(acc, p[i] ^ 3);
  }
  return acc;
}

int func_2(int *p, int n) {
  int i;
  int acc = 70;
  for (i = 0; i < n; i++) {
    acc = mix_add(acc, p[i] ^ 3);
  }
  return acc;
}

int main() {
  int i;
  short v_1 = 38;
  int v_2 = 34;
  long v_3 = 2;
  int arr_4[6];
  for (i = 0; i < 6; i++) {
    arr_4[i] = i ^ 2;
  }
  char buf_5[9];
  for (i = 0; i < 9; i++) {
    buf_5[i] = 'a' | i;
  }
  int *p_6 = &arr_4[1];
  {
    int t_7 = v_1;
    int *q_8 = &t_7;
    *q_8 = mix_add(*q_8, 41);
    v_1 = t_7;
  }
  g_37 = mix_add(v_1, v_2);
  {
    int *h_9 = malloc(6 * sizeof(int));
    for (i = 0; i < 6; i++) {
      h_9[i] = mix_mul(i, 3) ^ (v_3 & 7);
    }
    v_3 = (v_3 + *(h_9 + 2)) & 1023;
    int *hp_10 = h_9 + 5;
    v_3 = (v_3 - *hp_10) & 1023;
    free(h_9);
  }
  v_1 = mix_sub(g_37, v_2);
  v_1 = mix_sub(v_3, v_2);
  int n_11 = 2 + (v_2 & 3);
  while (n_11 > 0) {
    *p_6 = *(p_6 + 3);
    v_3 = mix_shl(v_2, v_2);
    v_1 = mix_add(v_1, p_6[4]);
    n_11--;
  }
  {
    int t_12 = v_2;
    int *q_13 = &t_12;
    *q_13 = mix_add(*q_13, 13);
    v_2 = t_12;
  }
  v_3 = mix_add(v_3, *(g_ptr + 1));
  int *q_14;
  for (q_14 = arr_4; q_14 < arr_4 + 6; q_14++) {
    v_3 = mix_add(v_3, *q_14);
  }
  p_6 = &arr_4[1];
  if (g_37 & 3) {
    v_1 = mix_sub(v_1, g_37);
  }
  v_1 = mix_add(g_37, g_37);
  v_3 = mix_add(v_3, func_2(g_arr0, 2));
  if (v_3 & 3) {
    v_3 = mix_sub(v_3, v_3);
  }
  printf("%d %d %d %d\n", (int)g_37, (int)v_1, (int)v_2, (int)v_3);
  printf("%d\n", buf_5[8]);
  return 0;
}
