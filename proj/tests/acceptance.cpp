#include <cstdio>

#include "resurgentia/tools/verify.hpp"

int main() {
  int failed = 0;
  for (const auto& r : resurgentia::tools::run_acceptance()) {
    std::printf("criterion %d: %s  %s (%.2fs) %s\n", r.id, r.pass ? "PASS" : "FAIL", r.name.c_str(),
                r.seconds, r.detail.c_str());
    if (!r.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
