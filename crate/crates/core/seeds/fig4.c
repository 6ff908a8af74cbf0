struct a {
  int x;
};
struct a b[2];
struct a *c = b, *d = b;
int k = 0;
int main() {
  *c = *b;
  *c = *(d + k);
  return c->x;
}
