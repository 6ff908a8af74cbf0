#include <stdio.h>
#include <stdlib.h>

int g_arr0[3] = {39, 11, 9};
int g_arr1[5] = {8, 3, 11, 29, 37};
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

int g_44 = 29;
int *g_ptr = g_arr0;

int func_1(int *p, int n) {
  int i;
  int acc = 43;
  for (i = 0; i < n; i++) {
    acc = mix_add(acc, p[i] ^ 1);
  }
  return acc;
}

int func_2(int *p, int n) {
  int i;
  int acc = 93;
  for (i = 0; i < n; i++) {
    if (p[i] > (acc & 63)) {
      acc = mix_add(acc, p[i]);
    }
  }
  return acc;
}

int main() {
  int i;
  int v_1 = 34;
  long v_2 = 30;
  long v_3 = 17;
  int arr_4[5];
  for (i = 0; i < 5; i++) {
    arr_4[i] = i ^ 1;
  }
  char buf_5[7];
  for (i = 0; i < 7; i++) {
    buf_5[i] = 'a' | i;
  }
  int *p_6 = &arr_4[0];
  *g_ptr = *(g_ptr + 1);
  *(p_6 + 1) = (mix_sub(g_44, v_2)) & 127;
  g_44 = mix_add(v_1, v_1);
  v_2 = mix_sub(g_44, *g_ptr);
  v_2 = mix_add(v_3, g_arr1[2]);
  {
    int *h_7 = malloc(2 * sizeof(int));
    for (i = 0; i < 2; i++) {
      h_7[i] = mix_mul(i, 1) ^ (v_1 & 7);
    }
    v_1 = (v_1 + *(h_7 + 1)) & 1023;
    int *hp_8 = h_7 + 1;
    v_1 = (v_1 - *hp_8) & 1023;
    free(h_7);
  }
  v_3 = mix_sub(v_3, v_3);
  int n_9 = 2 + (g_44 & 3);
  while (n_9 > 0) {
    {
      int t_10 = v_2;
      int *q_11 = &t_10;
      *q_11 = mix_add(*q_11, 10);
      v_2 = t_10;
    }
    arr_4[1] = (mix_add(g_44, buf_5[1])) & 127;
    g_44 = mix_add(g_44, func_1(g_arr1, 3));
    n_9--;
  }
  char *q_12;
  for (q_12 = buf_5; q_12 < buf_5 + 7; q_12++) {
    g_44 = mix_add(g_44, *q_12);
  }
  int n_13 = 2 + (v_3 & 3);
  while (n_13 > 0) {
    *(p_6 + 2) = (mix_shl(v_1, v_1)) & 127;
    if (n_13 & 3) {
      v_2 = mix_sub(v_2, n_13);
    }
    v_2 = mix_shl(v_2, v_3);
    n_13--;
  }
  if (g_44 != v_2) {
    *p_6 = *(p_6 + 1);
    for (i = 0; i < 7; i++) {
      buf_5[i] = mix_add(buf_5[i], v_3 ^ 5) & 127;
      v_3 = mix_add(v_3, buf_5[i]);
    }
    *g_ptr = *(g_ptr + 1);
  } else {
    int *q_14;
    for (q_14 = g_arr1; q_14 < g_arr1 + 5; q_14++) {
      v_2 = mix_add(v_2, *q_14);
    }
    p_6 = &arr_4[1];
  }
  g_ptr = &arr_4[3];
  printf("%d %d %d %d\n", (int)g_44, (int)v_1, (int)v_2, (int)v_3);
  printf("%d\n", buf_5[6]);
  return 0;
}
