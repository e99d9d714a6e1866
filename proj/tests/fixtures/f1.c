int global1;
int global2;

int f1() {
  return (global1 + global2);
}
