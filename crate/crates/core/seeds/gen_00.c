#include <stdio.h>
#include <stdlib.h>

int g_arr0[6] = {28, 3, 9, 29, 27, 20};
int g_arr1[8] = {7, 44, 38, 24, 26, 30, 17, 2};
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

int g_76 = 17;
int *g_ptr = g_arr0;

int main() {
  int i;
  long v_1 = 39;
  long v_2 = 35;
  int arr_3[7];
  for (i = 0; i < 7; i++) {
    arr_3[i] = i ^ 8;
  }
  char buf_4[4];
  for (i = 0; i < 4; i++) {
    buf_4[i] = 'a' | i;
  }
  int *p_5 = &arr_3[3];
  {
    int t_6 = v_2;
    int *q_7 = &t_6;
    *q_7 = mix_add(*q_7, 33);
    v_2 = t_6;
  }
  if (v_1 & 3) {
    v_1 = mix_sub(v_1, v_1);
  }
  int *q_8;
  for (q_8 = g_arr0; q_8 < g_arr0 + 6; q_8++) {
    v_2 = mix_add(v_2, *q_8);
  }
  g_76 = mix_sub(v_1, *p_5);
  {
    int t_9 = v_2;
    int *q_10 = &t_9;
    *q_10 = mix_add(*q_10, 43);
    v_2 = t_9;
  }
  v_1 = mix_add(g_76, g_arr1[5]);
  g_arr0[1] = (mix_add(v_1, buf_4[0])) & 127;
  v_2 = mix_add(v_1, g_76);
  g_76 = mix_shl(v_1, v_2);
  if (v_1 <= v_1) {
    {
      int t_11 = v_1;
      int *q_12 = &t_11;
      *q_12 = mix_add(*q_12, 26);
      v_1 = t_11;
    }
    g_76 = mix_shl(v_1, v_1);
    g_76 = mix_shl(g_76, v_2);
  }
  for (i = 0; i < 7; i++) {
    arr_3[i] = mix_add(arr_3[i], v_1 ^ 4) & 127;
    v_1 = mix_add(v_1, arr_3[i]);
  }
  v_2 += 5;
  v_2 &= 1023;
  printf("%d %d %d\n", (int)g_76, (int)v_1, (int)v_2);
  printf("%d\n", buf_4[3]);
  return 0;
}
