#include <stdio.h>
#include <stdlib.h>

struct node {
  int val;
  struct node *next;
};

struct node *push(struct node *head, int v) {
  struct node *n = malloc(sizeof(struct node));
  n->val = v;
  n->next = head;
  return n;
}

int sum(struct node *head) {
  int s = 0;
  struct node *cur = head;
  while (cur) {
    s = s + cur->val;
    cur = cur->next;
  }
  return s;
}

int main() {
  struct node *head = 0;
  int i;
  for (i = 0; i < 6; i++) {
    head = push(head, i * 3 + 1);
  }
  int total = sum(head);
  int first = head->val;
  struct node *second = head->next;
  int v = second->val;
  printf("%d %d %d\n", total, first, v);
  while (head) {
    struct node *nx = head->next;
    free(head);
    head = nx;
  }
  return 0;
}
