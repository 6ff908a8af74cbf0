#include <stdio.h>
#include <stdlib.h>

int g_arr0[4] = {20, 22, 22, 18};
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

int g_44 = 17;
int *g_ptr = g_arr0;

int func_1(int *p, int n) {
  int i;
  int acc = 68;
  for (i = 0; i < n; i++) {
    acc = mix_add(acc, p[i] ^ 2);
  }
  return acc;
}

int main() {
  int i;
  int v_1 = 33;
  long v_2 = 27;
  int arr_3[5];
  for (i = 0; i < 5; i++) {
    arr_3[i] = i ^ 9;
  }
  char buf_4[9];
  for (i = 0; i < 9; i++) {
    buf_4[i] = 'a' | i;
  }
  int *p_5 = &arr_3[1];
  g_ptr = &g_arr0[2];
  v_1 += 6;
  v_1 &= 1023;
  *(p_5 + 3) = (mix_add(v_1, v_1)) & 127;
  int *q_6;
  for (q_6 = g_arr0; q_6 < g_arr0 + 4; q_6++) {
    v_2 = mix_add(v_2, *q_6);
  }
  v_2 = mix_add(g_44, g_44);
  v_2 = mix_add(v_1, *(p_5 + 3));
  v_2 = mix_shl(v_2, g_44);
  *p_5 = *(p_5 + 2);
  printf("%d %d %d\n", (int)g_44, (int)v_1, (int)v_2);
  printf("%d\n", buf_4[8]);
  return 0;
}
