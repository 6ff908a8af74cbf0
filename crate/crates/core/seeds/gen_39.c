#include <stdio.h>
#include <stdlib.h>

int g_arr0[3] = {42, 31, 29};
int g_arr1[6] = {33, 26, 42, 44, 21, 20};
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

int g_87 = 18;
int *g_ptr = g_arr0;

int main() {
  int i;
  int v_1 = 21;
  short v_2 = 9;
  int arr_3[7];
  for (i = 0; i < 7; i++) {
    arr_3[i] = i ^ 3;
  }
  char buf_4[6];
  for (i = 0; i < 6; i++) {
    buf_4[i] = 'a' | i;
  }
  int *p_5 = &arr_3[0];
  v_2 = mix_add(v_1, g_arr0[2]);
  if (v_2 & 3) {
    g_87 = mix_sub(g_87, v_2);
  }
  g_ptr = &g_arr1[2];
  {
    int *h_6 = malloc(6 * sizeof(int));
    for (i = 0; i < 6; i++) {
      h_6[i] = mix_mul(i, 4) ^ (v_1 & 7);
    }
    v_1 = (v_1 + *(h_6 + 3)) & 1023;
    int *hp_7 = h_6 + 5;
    v_1 = (v_1 - *hp_7) & 1023;
    free(h_6);
  }
  v_1 = mix_sub(g_87, v_2);
  if (v_2 & 3) {
    g_87 = mix_sub(g_87, v_2);
  }
  g_87 = mix_add(g_87, v_2);
  g_87 = mix_add(g_87, g_ptr[1]);
  *g_ptr = (mix_add(v_1, *(p_5 + 1))) & 127;
  int n_8 = 2 + (g_87 & 3);
  while (n_8 > 0) {
    g_arr1[4] = (mix_add(g_87, arr_3[6])) & 127;
    n_8 = mix_add(n_8, g_ptr[1]);
    {
      int *h_9 = malloc(3 * sizeof(int));
      for (i = 0; i < 3; i++) {
        h_9[i] = mix_mul(i, 4) ^ (n_8 & 7);
      }
      n_8 = (n_8 + *(h_9 + 1)) & 1023;
      int *hp_10 = h_9 + 2;
      n_8 = (n_8 - *hp_10) & 1023;
      free(h_9);
    }
    n_8--;
  }
  printf("%d %d %d\n", (int)g_87, (int)v_1, (int)v_2);
  printf("%d\n", buf_4[5]);
  return 0;
}
