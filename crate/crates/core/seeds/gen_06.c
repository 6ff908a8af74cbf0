#include <stdio.h>
#include <stdlib.h>

struct rec {
  int key;
  int vals[3];
  long total;
};

struct rec recs[3];
int g_arr0[4] = {29, 4, 44, 3};
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

int g_17 = 3;
int *g_ptr = g_arr0;

int main() {
  int i;
  short v_1 = 13;
  short v_2 = 2;
  int arr_3[7];
  for (i = 0; i < 7; i++) {
    arr_3[i] = i ^ 5;
  }
  char buf_4[7];
  for (i = 0; i < 7; i++) {
    buf_4[i] = 'a' | i;
  }
  int *p_5 = &arr_3[6];
  struct rec *r_6 = &recs[1];
  r_6->key = v_1 % 100;
  r_6->vals[2] = r_6->key + 1;
  r_6->total = r_6->vals[2] * 3;
  int *rp_7 = r_6->vals;
  if (v_2 <= g_17) {
    v_2 = mix_add(g_17, v_1);
    g_17 = mix_mul(g_17, *p_5);
    g_17 = mix_add(v_1, arr_3[2]);
  } else {
    if (v_1 & 3) {
      v_1 = mix_sub(v_1, v_1);
    }
    for (i = 0; i < 7; i++) {
      arr_3[i] = mix_add(arr_3[i], v_1 ^ 4) & 127;
      v_1 = mix_add(v_1, arr_3[i]);
    }
  }
  v_2 = mix_add(g_17, v_1);
  buf_4[1] = (mix_add(v_2, *(rp_7 + 2))) & 127;
  int *q_8;
  for (q_8 = g_arr0; q_8 < g_arr0 + 4; q_8++) {
    v_1 = mix_add(v_1, *q_8);
  }
  g_17 = mix_shl(v_1, v_1);
  {
    int *h_9 = malloc(4 * sizeof(int));
    for (i = 0; i < 4; i++) {
      h_9[i] = mix_mul(i, 1) ^ (v_2 & 7);
    }
    v_2 = (v_2 + *(h_9 + 1)) & 1023;
    int *hp_10 = h_9 + 3;
    v_2 = (v_2 - *hp_10) & 1023;
    free(h_9);
  }
  arr_3[2] = (mix_sub(v_2, *g_ptr)) & 127;
  {
    int *h_11 = malloc(6 * sizeof(int));
    for (i = 0; i < 6; i++) {
      h_11[i] = mix_mul(i, 4) ^ (v_2 & 7);
    }
    v_2 = (v_2 + *(h_11 + 4)) & 1023;
    int *hp_12 = h_11 + 5;
    v_2 = (v_2 - *hp_12) & 1023;
    free(h_11);
  }
  if (v_2 <= g_17) {
    v_2 = mix_add(v_2, buf_4[0]);
    v_2 = mix_add(v_2, g_ptr[0]);
    g_ptr = &g_arr0[2];
  } else {
    char *q_13;
    for (q_13 = buf_4; q_13 < buf_4 + 7; q_13++) {
      g_17 = mix_add(g_17, *q_13);
    }
    g_ptr = &arr_3[1];
  }
  if (v_2 & 3) {
    v_1 = mix_sub(v_1, v_2);
  }
  int *q_14;
  for (q_14 = arr_3; q_14 < arr_3 + 7; q_14++) {
    v_2 = mix_add(v_2, *q_14);
  }
  for (i = 0; i < 7; i++) {
    arr_3[i] = mix_add(arr_3[i], v_2 ^ 3) & 127;
    v_2 = mix_add(v_2, arr_3[i]);
  }
  printf("%d %d %d\n", (int)g_17, (int)v_1, (int)v_2);
  printf("%d\n", buf_4[6]);
  return 0;
}
