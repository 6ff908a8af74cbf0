#include <stdio.h>
#include <stdlib.h>

int g_arr0[7] = {16, 22, 0, 4, 18, 35, 2};
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

int g_61 = 18;
int *g_ptr = g_arr0;

int main() {
  int i;
  int v_1 = 12;
  int v_2 = 16;
  long v_3 = 8;
  int arr_4[7];
  for (i = 0; i < 7; i++) {
    arr_4[i] = i ^ 8;
  }
  char buf_5[8];
  for (i = 0; i < 8; i++) {
    buf_5[i] = 'a' | i;
  }
  int *p_6 = &arr_4[4];
  g_61 = mix_sub(v_2, v_2);
  v_3 = mix_add(v_2, *(p_6 + 2));
  v_1 = mix_div(v_1, g_61);
  *p_6 = *(p_6 + 1);
  g_61 = mix_add(g_61, *(p_6 + 1));
  v_2 = mix_sub(g_61, g_61);
  char *q_7;
  for (q_7 = buf_5; q_7 < buf_5 + 8; q_7++) {
    g_61 = mix_add(g_61, *q_7);
  }
  v_1 = mix_sub(v_2, v_1);
  *(g_ptr + 5) = (mix_mul(v_1, 6)) & 127;
  *(g_ptr + 1) = (mix_add(v_3, *(g_ptr + 2))) & 127;
  v_3 = mix_add(v_3, p_6[0]);
  char *q_8;
  for (q_8 = buf_5; q_8 < buf_5 + 8; q_8++) {
    g_61 = mix_add(g_61, *q_8);
  }
  v_2 += 9;
  v_2 &= 1023;
  v_2 = mix_add(v_2, p_6[0]);
  int *q_9;
  for (q_9 = arr_4; q_9 < arr_4 + 7; q_9++) {
    v_1 = mix_add(v_1, *q_9);
  }
  printf("%d %d %d %d\n", (int)g_61, (int)v_1, (int)v_2, (int)v_3);
  printf("%d\n", buf_5[7]);
  return 0;
}
