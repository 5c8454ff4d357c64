#pragma once

#include <cstdint>

// Seed for randomized tests, set with --seed on the test binary.
std::uint64_t test_seed();
