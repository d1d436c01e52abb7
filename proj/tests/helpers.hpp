#pragma once

#include <doctest.h>

#include "castle/error.hpp"

namespace castle::testing {

// The code of the Error thrown by f; fails the current test if nothing is
// thrown.
template <typename F>
Errc error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return Errc::Parse;
}

}  // namespace castle::testing
