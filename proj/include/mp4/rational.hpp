#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <sstream>
#include <stdexcept>
#include <string>

namespace mp4 {

using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

// boost::multiprecision predates <=>; defaulted comparisons over Rat members
// need a three-way operator visible in this namespace.
template <class T>
    requires(std::is_same_v<T, Rat> || std::is_same_v<T, Int>)
inline std::strong_ordering operator<=>(const T& a, const T& b) {
    if (a < b) return std::strong_ordering::less;
    if (b < a) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

// Raised when a computation hits a case the engine deliberately refuses to
// handle (higher-order poles, order>=2 operator Taylor terms, and so on).
// The CLI maps it to exit code 2.
class UnsupportedCase : public std::runtime_error {
public:
    explicit UnsupportedCase(const std::string& msg) : std::runtime_error(msg) {}
};

class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

inline std::string rat_str(const Rat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

inline Rat rat_of(long n, long d = 1) { return Rat(n, d); }

} // namespace mp4
