#pragma once

#include "gqm/error.hpp"

#include <gtest/gtest.h>

// Asserts that `stmt` throws gqm::Error of the given kind.
#define EXPECT_GQM_ERROR(stmt, expected_kind)                                             \
  do {                                                                                    \
    try {                                                                                 \
      (void)(stmt);                                                                       \
      ADD_FAILURE() << #stmt " did not throw";                                            \
    } catch (const gqm::Error& e) {                                                       \
      EXPECT_EQ(e.kind(), gqm::ErrorKind::expected_kind) << e.what();                     \
    }                                                                                     \
  } while (0)
