#include <stdio.h>
#include <stdlib.h>

struct ring {
  int *buf;
  int cap;
  int head;
  int count;
};

void put(struct ring *r, int v) {
  int at = (r->head + r->count) % r->cap;
  r->buf[at] = v;
  if (r->count < r->cap) {
    r->count++;
  } else {
    r->head = (r->head + 1) % r->cap;
  }
}

int get(struct ring *r) {
  int v = r->buf[r->head];
  r->head = (r->head + 1) % r->cap;
  r->count--;
  return v;
}

int main() {
  struct ring r;
  r.cap = 5;
  r.buf = malloc(5 * sizeof(int));
  r.head = 0;
  r.count = 0;
  int i;
  for (i = 0; i < 8; i++) {
    put(&r, i * i);
  }
  int a = get(&r);
  int b = get(&r);
  int *slot = r.buf + 2;
  int c = *slot;
  printf("%d %d %d %d\n", a, b, c, r.count);
  free(r.buf);
  return 0;
}
