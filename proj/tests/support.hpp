#pragma once

#include <doctest.h>

#include "ipdhyp/scalar.hpp"

namespace ipdtest {

inline ipd::Complex C(const char* text) { return ipd::Complex::parse(text); }

inline ipd::Real rel_err(const ipd::Complex& got, const ipd::Complex& want) {
  return ipd::abs(got - want) / std::max(ipd::Real(1), ipd::abs(want));
}

/// |got - want| / max(1, |want|) <= 10^-(P - slack).
inline bool close(const ipd::Complex& got, const ipd::Complex& want, int slack = 12) {
  return rel_err(got, want) <= ipd::Precision::tolerance(slack);
}

}  // namespace ipdtest

#define CHECK_CLOSE(got, want, ...)                                                          \
  do {                                                                                       \
    const ipd::Complex got_ = (got);                                                         \
    const ipd::Complex want_ = (want);                                                       \
    INFO("got " << ipd::to_string(got_, 20) << ", want " << ipd::to_string(want_, 20));      \
    CHECK(ipdtest::close(got_, want_, ##__VA_ARGS__));                                       \
  } while (0)
