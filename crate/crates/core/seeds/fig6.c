int main() {
  int a[5];
  int x = 1;
  a[x] = 1;
  return 0;
}
