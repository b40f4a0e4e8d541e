#pragma once

#include <string>

#include "oddcf/cubic.hpp"

// Reference decimals below were produced outside this code base with mpmath
// at 50 digits (lambda from findroot, F0 from a separate odd Euclid loop).

namespace oracle {

inline const char* const kLambda = "1.839286755214161132551852564653286600424";

inline oddcf::Rational decimal(const std::string& text) {
    const auto dot = text.find('.');
    std::string digits = text.substr(0, dot);
    oddcf::Integer scale = 1;
    if (dot != std::string::npos) {
        for (char c : text.substr(dot + 1)) {
            digits.push_back(c);
            scale *= 10;
        }
    }
    return oddcf::Rational(oddcf::Integer(digits, 10), scale);
}

// |v - text| < 10^-(places)
inline bool close_to(const oddcf::CubicNumber& v, const std::string& text, int places = 25) {
    oddcf::Integer p = 1;
    for (int i = 0; i < places; ++i) p *= 10;
    const oddcf::Rational tol(oddcf::Integer(1), p);
    const oddcf::Enclosure e = oddcf::enclose(v, 128);
    const oddcf::Rational ref = decimal(text);
    return ref - tol < e.lo && e.hi < ref + tol;
}

}  // namespace oracle
