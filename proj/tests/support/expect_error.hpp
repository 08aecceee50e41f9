#pragma once

#include "tttest/error.hpp"

#include <gtest/gtest.h>

/// Asserts that `statement` throws ttt::Error carrying `expected_code`.
#define EXPECT_TTT_ERROR(statement, expected_code)                                    \
    do {                                                                              \
        try {                                                                         \
            (void)(statement);                                                        \
            ADD_FAILURE() << "expected " << ttt::to_string(expected_code)             \
                          << ", nothing was thrown";                                  \
        } catch (const ttt::Error& e) {                                               \
            EXPECT_EQ(e.code(), expected_code)                                        \
                << "got " << ttt::to_string(e.code()) << ": " << e.what();            \
        }                                                                             \
    } while (false)
