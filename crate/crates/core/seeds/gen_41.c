#include <stdio.h>
#include <stdlib.h>

int g_arr0[6] = {28, 15, 12, 46, 28, 42};
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

int g_85 = 8;
int *g_ptr = g_arr0;

int func_1(int *p, int n) {
  int i;
  int acc = 13;
  for (i = 0; i < n; i++) {
    acc = mix_add(acc, p[i] ^ 3);
  }
  return acc;
}

int func_2(int *p, int n) {
  int i;
  int acc = 4;
  for (i = 0; i < n; i++) {
    acc = mix_add(acc, p[i] ^ 6);
  }
  return acc;
}

int main() {
  int i;
  int v_1 = 0;
  short v_2 = 31;
  int arr_3[7];
  for (i = 0; i < 7; i++) {
    arr_3[i] = i ^ 4;
  }
  char buf_4[4];
  for (i = 0; i < 4; i++) {
    buf_4[i] = 'a' | i;
  }
  int *p_5 = &arr_3[2];
  v_2 = mix_add(v_2, p_5[1]);
  v_1 = mix_add(v_1, g_arr0[1]);
  v_1 = mix_add(v_1, g_ptr[1]);
  g_85 += 5;
  g_85 &= 1023;
  v_1 = mix_sub(v_2, g_85);
  int n_6 = 2 + (g_85 & 3);
  while (n_6 > 0) {
    if (v_1 & 3) {
      n_6 = mix_sub(n_6, v_1);
    }
    *(g_ptr + 5) = (mix_div(n_6, g_85)) & 127;
    v_1 = mix_add(v_1, func_1(arr_3, 4));
    n_6--;
  }
  {
    int *h_7 = malloc(5 * sizeof(int));
    for (i = 0; i < 5; i++) {
      h_7[i] = mix_mul(i, 3) ^ (v_2 & 7);
    }
    v_2 = (v_2 + *(h_7 + 1)) & 1023;
    int *hp_8 = h_7 + 4;
    v_2 = (v_2 - *hp_8) & 1023;
    free(h_7);
  }
  if (g_85 != v_2) {
    v_1 = mix_sub(v_1, g_85);
    int *q_9;
    for (q_9 = arr_3; q_9 < arr_3 + 7; q_9++) {
      v_1 = mix_add(v_1, *q_9);
    }
    char *q_10;
    for (q_10 = buf_4; q_10 < buf_4 + 4; q_10++) {
      v_2 = mix_add(v_2, *q_10);
    }
  }
  v_2 = mix_add(v_2, func_2(arr_3, 4));
  arr_3[2] = (mix_sub(v_2, v_2)) & 127;
  printf("%d %d %d\n", (int)g_85, (int)v_1, (int)v_2);
  printf("%d\n", buf_4[3]);
  return 0;
}
