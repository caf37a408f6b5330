#pragma once

#include <catch_amalgamated.hpp>

#include "amlat/error.hpp"
#include "oracles.hpp"

namespace amlat::testing {

inline auto is_kind(errc kind) {
  return Catch::Matchers::Predicate<error>([kind](const error& e) { return e.kind() == kind; },
                                           "error kind is " + std::string(to_string(kind)));
}

}  // namespace amlat::testing

#define CHECK_THROWS_KIND(expr, kind) CHECK_THROWS_MATCHES(expr, ::amlat::error, ::amlat::testing::is_kind(kind))
