#include <iostream>
#include <vector>

// Placeholder until the CLI module lands.
int main() {
  std::cout << "traid cli: not wired up yet\n";
  return 0;
}
