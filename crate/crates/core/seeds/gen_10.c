#include <stdio.h>
#include <stdlib.h>

int g_arr0[4] = {43, 21, 42, 8};
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

int g_82 = 3;
int *g_ptr = g_arr0;

int func_1(int *p, int n) {
  int i;
  int acc = 84;
  for (i = 0; i < n; i++) {
    acc = mix_add(acc, p[i] ^ 1);
  }
  return acc;
}

int func_2(int *p, int n) {
  int i;
  int acc = 88;
  for (i = 0; i < n; i++) {
    acc = mix_add(acc, p[i] ^ 1);
  }
  return acc;
}

int main() {
  int i;
  int v_1 = 31;
  int v_2 = 35;
  int v_3 = 3;
  int arr_4[4];
  for (i = 0; i < 4; i++) {
    arr_4[i] = i ^ 2;
  }
  char buf_5[4];
  for (i = 0; i < 4; i++) {
    buf_5[i] = 'a' | i;
  }
  int *p_6 = &arr_4[2];
  *(p_6 + 1) = (mix_sub(v_1, v_3)) & 127;
  if (v_3 > v_3) {
    v_1 = mix_add(v_1, func_1(arr_4, 4));
    v_3 = mix_add(v_1, arr_4[2]);
    g_arr0[2] = (mix_add(v_3, buf_5[1])) & 127;
  } else {
    char *q_7;
    for (q_7 = buf_5; q_7 < buf_5 + 4; q_7++) {
      v_2 = mix_add(v_2, *q_7);
    }
    *p_6 = (mix_shl(v_1, v_2)) & 127;
  }
  g_arr0[3] = (mix_add(v_3, g_arr0[2])) & 127;
  if (v_3 & 3) {
    v_3 = mix_sub(v_3, v_3);
  }
  v_2 = mix_shl(g_82, v_3);
  {
    int *h_8 = malloc(3 * sizeof(int));
    for (i = 0; i < 3; i++) {
      h_8[i] = mix_mul(i, 4) ^ (v_2 & 7);
    }
    v_2 = (v_2 + *(h_8 + 0)) & 1023;
    int *hp_9 = h_8 + 2;
    v_2 = (v_2 - *hp_9) & 1023;
    free(h_8);
  }
  v_1 = mix_sub(v_3, *p_6);
  v_1 = mix_shl(v_1, v_3);
  printf("%d %d %d %d\n", (int)g_82, (int)v_1, (int)v_2, (int)v_3);
  printf("%d\n", buf_5[3]);
  return 0;
}
