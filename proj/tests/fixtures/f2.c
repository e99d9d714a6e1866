int global1;

void f2() {
  init(global1);
}
