#include <stdio.h>
#include <stdlib.h>

int g_arr0[7] = {41, 2, 13, 33, 5, 32, 22};
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

int g_94 = 26;
int *g_ptr = g_arr0;

int func_1(int *p, int n) {
  int i;
  int acc = 68;
  for (i = 0; i < n; i++) {
    if (p[i] > (acc & 63)) {
      acc = mix_add(acc, p[i]);
    }
  }
  return acc;
}

int main() {
  int i;
  int v_1 = 6;
  short v_2 = 15;
  long v_3 = 29;
  int arr_4[4];
  for (i = 0; i < 4; i++) {
    arr_4[i] = i ^ 9;
  }
  char buf_5[6];
  for (i = 0; i < 6; i++) {
    buf_5[i] = 'a' | i;
  }
  int *p_6 = &arr_4[3];
  for (i = 0; i < 6; i++) {
    buf_5[i] = mix_add(buf_5[i], g_94 ^ 7) & 127;
    g_94 = mix_add(g_94, buf_5[i]);
  }
  char *q_7;
  for (q_7 = buf_5; q_7 < buf_5 + 6; q_7++) {
    v_2 = mix_add(v_2, *q_7);
  }
  v_1 = mix_mul(v_1, 8);
  int n_8 = 2 + (v_3 & 3);
  while (n_8 > 0) {
    *(g_ptr + 2) = (mix_shl(n_8, n_8)) & 127;
    {
      int *h_9 = malloc(2 * sizeof(int));
      for (i = 0; i < 2; i++) {
        h_9[i] = mix_mul(i, 4) ^ (v_1 & 7);
      }
      v_1 = (v_1 + *(h_9 + 1)) & 1023;
      int *hp_10 = h_9 + 1;
      v_1 = (v_1 - *hp_10) & 1023;
      free(h_9);
    }
    n_8 = mix_sub(n_8, *p_6);
    n_8--;
  }
  g_94 = mix_mul(g_94, *p_6);
  {
    int t_11 = v_1;
    int *q_12 = &t_11;
    *q_12 = mix_add(*q_12, 30);
    v_1 = t_11;
  }
  if (v_2 <= v_1) {
    v_1 = mix_div(g_94, v_3);
    v_2 = mix_shl(g_94, v_3);
    v_1 = mix_mul(v_1, *p_6);
  }
  for (i = 0; i < 6; i++) {
    buf_5[i] = mix_add(buf_5[i], v_1 ^ 9) & 127;
    v_1 = mix_add(v_1, buf_5[i]);
  }
  int *q_13;
  for (q_13 = g_arr0; q_13 < g_arr0 + 7; q_13++) {
    v_1 = mix_add(v_1, *q_13);
  }
  printf("%d %d %d %d\n", (int)g_94, (int)v_1, (int)v_2, (int)v_3);
  printf("%d\n", buf_5[5]);
  return 0;
}
