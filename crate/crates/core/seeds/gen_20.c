#include <stdio.h>
#include <stdlib.h>

int g_arr0[6] = {43, 17, 22, 38, 36, 43};
int g_arr1[4] = {49, 45, 49, 41};
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

int g_31 = 25;
int *g_ptr = g_arr0;

int func_1(int *p, int n) {
  int i;
  int acc = 33;
  for (i = 0; i < n; i++) {
    acc = mix_add(acc, p[i] ^ 1);
  }
  return acc;
}

int main() {
  int i;
  int v_1 = 27;
  long v_2 = 31;
  int arr_3[7];
  for (i = 0; i < 7; i++) {
    arr_3[i] = i ^ 3;
  }
  char buf_4[5];
  for (i = 0; i < 5; i++) {
    buf_4[i] = 'a' | i;
  }
  int *p_5 = &arr_3[3];
  buf_4[0] = (mix_add(v_1, v_2)) & 127;
  v_1 = mix_add(v_1, *(p_5 + 2));
  *p_5 = *(p_5 + 3);
  {
    int *h_6 = malloc(3 * sizeof(int));
    for (i = 0; i < 3; i++) {
      h_6[i] = mix_mul(i, 3) ^ (v_1 & 7);
    }
    v_1 = (v_1 + *(h_6 + 1)) & 1023;
    int *hp_7 = h_6 + 2;
    v_1 = (v_1 - *hp_7) & 1023;
    free(h_6);
  }
  v_1 = mix_sub(v_2, *p_5);
  for (i = 0; i < 5; i++) {
    buf_4[i] = mix_add(buf_4[i], v_1 ^ 1) & 127;
    v_1 = mix_add(v_1, buf_4[i]);
  }
  v_1 = mix_add(v_1, p_5[2]);
  g_arr0[3] = (mix_shl(v_2, v_2)) & 127;
  g_31++;
  g_31 &= 1023;
  {
    int *h_8 = malloc(2 * sizeof(int));
    for (i = 0; i < 2; i++) {
      h_8[i] = mix_mul(i, 1) ^ (v_2 & 7);
    }
    v_2 = (v_2 + *(h_8 + 0)) & 1023;
    int *hp_9 = h_8 + 1;
    v_2 = (v_2 - *hp_9) & 1023;
    free(h_8);
  }
  {
    int t_10 = v_1;
    int *q_11 = &t_10;
    *q_11 = mix_add(*q_11, 45);
    v_1 = t_10;
  }
  int n_12 = 2 + (g_31 & 3);
  while (n_12 > 0) {
    *p_5 = *(p_5 + 3);
    {
      int *h_13 = malloc(4 * sizeof(int));
      for (i = 0; i < 4; i++) {
        h_13[i] = mix_mul(i, 1) ^ (v_1 & 7);
      }
      v_1 = (v_1 + *(h_13 + 2)) & 1023;
      int *hp_14 = h_13 + 3;
      v_1 = (v_1 - *hp_14) & 1023;
      free(h_13);
    }
    char *q_15;
    for (q_15 = buf_4; q_15 < buf_4 + 5; q_15++) {
      v_1 = mix_add(v_1, *q_15);
    }
    n_12--;
  }
  v_2 = mix_add(v_1, *(g_ptr + 2));
  {
    int t_16 = v_1;
    int *q_17 = &t_16;
    *q_17 = mix_add(*q_17, 15);
    v_1 = t_16;
  }
  printf("%d %d %d\n", (int)g_31, (int)v_1, (int)v_2);
  printf("%d\n", buf_4[4]);
  return 0;
}
