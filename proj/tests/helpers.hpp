#pragma once

#include "shintani/arith.hpp"
#include "shintani/cyclotomic.hpp"
#include "shintani/field.hpp"

namespace testing {

inline shintani::FieldElement el(const shintani::FieldSpec& f, int64_t a, int64_t b = 0) {
    return shintani::FieldElement(f, shintani::Rational(a), shintani::Rational(b));
}

inline shintani::CycNumber rat(int64_t n, int64_t d = 1) {
    return shintani::CycNumber::rational(shintani::make_rational(n, d));
}

}  // namespace testing
