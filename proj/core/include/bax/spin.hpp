#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace bax {

using Rational = boost::rational<std::int64_t>;

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);

// exp(i*pi*r), with r reduced mod 2 exactly before going to floating point.
std::complex<double> phase_pi(const Rational& r);

}  // namespace bax
