#pragma once

#include "doctest.h"
#include "qsuper/report.hpp"

#include <string>

namespace qsuper::test {

inline std::string describe(const Report& r) { return r.summary(); }

}  // namespace qsuper::test

#define CHECK_REPORT(r)                                  \
  do {                                                   \
    const ::qsuper::Report& rep_ = (r);                  \
    INFO(::qsuper::test::describe(rep_));                \
    CHECK(rep_.ok());                                    \
  } while (0)

#define CHECK_REPORT_FAILS(r)                            \
  do {                                                   \
    const ::qsuper::Report& rep_ = (r);                  \
    INFO(rep_.summary());                                \
    CHECK_FALSE(rep_.ok());                              \
  } while (0)
