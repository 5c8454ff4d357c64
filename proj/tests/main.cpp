#include <gtest/gtest.h>

#include <cstring>
#include <string>

#include "seed.hpp"

namespace {
std::uint64_t g_seed = 20240917;
}

std::uint64_t test_seed() { return g_seed; }

int main(int argc, char** argv) {
  ::testing::InitGoogleTest(&argc, argv);
  for (int i = 1; i < argc; ++i) {
    if (std::strncmp(argv[i], "--seed=", 7) == 0) {
      g_seed = std::stoull(argv[i] + 7);
    } else if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) {
      g_seed = std::stoull(argv[++i]);
    }
  }
  return RUN_ALL_TESTS();
}
