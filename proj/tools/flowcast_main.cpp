#include <cstdio>

int main() {
  std::puts("flowcast: subcommands not wired yet");
  return 0;
}
