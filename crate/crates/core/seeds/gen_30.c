#include <stdio.h>
#include <stdlib.h>

int g_arr0[5] = {39, 10, 43, 6, 27};
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

int g_14 = 26;
int *g_ptr = g_arr0;

int func_1(int *p, int n) {
  int i;
  int acc = 91;
  for (i = 0; i < n; i++) {
    acc = mix_add(acc, p[i] ^ 4);
  }
  return acc;
}

int main() {
  int i;
  short v_1 = 20;
  long v_2 = 6;
  int arr_3[6];
  for (i = 0; i < 6; i++) {
    arr_3[i] = i ^ 8;
  }
  char buf_4[7];
  for (i = 0; i < 7; i++) {
    buf_4[i] = 'a' | i;
  }
  int *p_5 = &arr_3[2];
  int *q_6;
  for (q_6 = arr_3; q_6 < arr_3 + 6; q_6++) {
    v_2 = mix_add(v_2, *q_6);
  }
  if (g_14 & 3) {
    g_14 = mix_sub(g_14, g_14);
  }
  v_2 = mix_add(v_2, g_ptr[3]);
  v_2 = mix_add(v_2, func_1(g_arr0, 5));
  g_14 = mix_add(v_1, *(g_ptr + 4));
  {
    int t_7 = v_1;
    int *q_8 = &t_7;
    *q_8 = mix_add(*q_8, 1);
    v_1 = t_7;
  }
  {
    int *h_9 = malloc(2 * sizeof(int));
    for (i = 0; i < 2; i++) {
      h_9[i] = mix_mul(i, 3) ^ (v_2 & 7);
    }
    v_2 = (v_2 + *(h_9 + 0)) & 1023;
    int *hp_10 = h_9 + 1;
    v_2 = (v_2 - *hp_10) & 1023;
    free(h_9);
  }
  v_2 *= 1;
  v_2 &= 1023;
  g_14 = mix_add(g_14, func_1(arr_3, 4));
  v_2 = mix_sub(v_1, *p_5);
  printf("%d %d %d\n", (int)g_14, (int)v_1, (int)v_2);
  printf("%d\n", buf_4[6]);
  return 0;
}
