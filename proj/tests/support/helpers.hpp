#pragma once

#include <gtest/gtest.h>

#include <functional>

#include "gsqg/error.hpp"
#include "support/shapes.hpp"

namespace gsqg::test {

/// Kind of the gsqg::Error thrown by f; records a failure when nothing is thrown.
inline ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no gsqg::Error thrown";
  return ErrorKind::invalid_parameter;
}

}  // namespace gsqg::test
