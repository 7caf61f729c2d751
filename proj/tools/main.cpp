#include <cstdio>

int main() {
  std::puts("digitrec: cli not wired yet");
  return 1;
}
