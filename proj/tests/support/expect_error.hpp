#pragma once

#include <gtest/gtest.h>

#include "twomode/error.hpp"

// Fails unless `stmt` throws twomode::Error of the given kind.
#define EXPECT_ERROR_KIND(stmt, expected_kind)                               \
  do {                                                                       \
    try {                                                                    \
      stmt;                                                                  \
      ADD_FAILURE() << #stmt " did not throw";                               \
    } catch (const ::twomode::Error& e) {                                    \
      EXPECT_EQ(e.kind(), expected_kind) << e.what();                        \
    }                                                                        \
  } while (false)
