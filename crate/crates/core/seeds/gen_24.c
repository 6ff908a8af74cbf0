#include <stdio.h>
#include <stdlib.h>

int g_arr0[8] = {24, 39, 29, 21, 21, 2, 36, 28};
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

int g_42 = 20;
int *g_ptr = g_arr0;

int main() {
  int i;
  int v_1 = 27;
  int v_2 = 7;
  short v_3 = 35;
  int arr_4[5];
  for (i = 0; i < 5; i++) {
    arr_4[i] = i ^ 7;
  }
  char buf_5[4];
  for (i = 0; i < 4; i++) {
    buf_5[i] = 'a' | i;
  }
  int *p_6 = &arr_4[4];
  {
    int *h_7 = malloc(5 * sizeof(int));
    for (i = 0; i < 5; i++) {
      h_7[i] = mix_mul(i, 4) ^ (v_3 & 7);
    }
    v_3 = (v_3 + *(h_7 + 3)) & 1023;
    int *hp_8 = h_7 + 4;
    v_3 = (v_3 - *hp_8) & 1023;
    free(h_7);
  }
  *(g_ptr + 5) = (mix_add(v_2, g_arr0[6])) & 127;
  if (v_2 <= v_1) {
    v_1 = mix_mul(g_42, 1);
    if (v_1 & 3) {
      g_42 = mix_sub(g_42, v_1);
    }
    v_3 = mix_shl(v_1, v_3);
  }
  g_42 = mix_mul(v_3, 7);
  v_1 = mix_add(v_2, arr_4[0]);
  int *q_9;
  for (q_9 = arr_4; q_9 < arr_4 + 5; q_9++) {
    v_2 = mix_add(v_2, *q_9);
  }
  g_42 = mix_shl(v_2, v_3);
  buf_5[2] = (mix_add(v_2, arr_4[0])) & 127;
  v_3 = mix_add(v_3, g_arr0[3]);
  *g_ptr = *(g_ptr + 6);
  printf("%d %d %d %d\n", (int)g_42, (int)v_1, (int)v_2, (int)v_3);
  printf("%d\n", buf_5[3]);
  return 0;
}
