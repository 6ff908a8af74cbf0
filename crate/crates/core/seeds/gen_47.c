#include <stdio.h>
#include <stdlib.h>

int g_arr0[4] = {37, 2, 12, 38};
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

int g_75 = 10;
int *g_ptr = g_arr0;

int func_1(int *p, int n) {
  int i;
  int acc = 99;
  for (i = 0; i < n; i++) {
    acc = mix_add(acc, p[i] ^ 5);
  }
  return acc;
}

int func_2(int *p, int n) {
  int i;
  int acc = 73;
  for (i = 0; i < n; i++) {
    acc = mix_add(mix_mul(acc, 5), *(p + i));
  }
  return acc;
}

int main() {
  int i;
  int v_1 = 2;
  int v_2 = 23;
  int arr_3[6];
  for (i = 0; i < 6; i++) {
    arr_3[i] = i ^ 8;
  }
  char buf_4[6];
  for (i = 0; i < 6; i++) {
    buf_4[i] = 'a' | i;
  }
  int *p_5 = &arr_3[0];
  {
    int t_6 = g_75;
    int *q_7 = &t_6;
    *q_7 = mix_add(*q_7, 35);
    g_75 = t_6;
  }
  if (v_1 <= v_2) {
    int *q_8;
    for (q_8 = arr_3; q_8 < arr_3 + 6; q_8++) {
      v_2 = mix_add(v_2, *q_8);
    }
    *(p_5 + 4) = (mix_add(g_75, *(p_5 + 4))) & 127;
    {
      int t_9 = v_2;
      int *q_10 = &t_9;
      *q_10 = mix_add(*q_10, 35);
      v_2 = t_9;
    }
  } else {
    v_1 = mix_add(v_2, *(g_ptr + 1));
    v_2 = mix_mul(v_1, 1);
  }
  v_2 = mix_shl(g_75, g_75);
  int n_11 = 2 + (v_2 & 3);
  while (n_11 > 0) {
    arr_3[0] = (mix_shl(v_2, v_1)) & 127;
    char *q_12;
    for (q_12 = buf_4; q_12 < buf_4 + 6; q_12++) {
      v_2 = mix_add(v_2, *q_12);
    }
    v_1 = mix_add(g_75, g_arr0[0]);
    n_11--;
  }
  if (g_75 & 3) {
    g_75 = mix_sub(g_75, g_75);
  }
  {
    int t_13 = v_2;
    int *q_14 = &t_13;
    *q_14 = mix_add(*q_14, 28);
    v_2 = t_13;
  }
  g_75 = mix_shl(v_1, v_2);
  *g_ptr = *(g_ptr + 3);
  printf("%d %d %d\n", (int)g_75, (int)v_1, (int)v_2);
  printf("%d\n", buf_4[5]);
  return 0;
}
