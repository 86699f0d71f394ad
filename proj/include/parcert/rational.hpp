#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <sstream>
#include <stdexcept>
#include <string>

namespace parcert {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Thrown on bad user input (unknown form, invalid rank, malformed flags).
// The CLI maps it to exit code 2.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::string rat_str(const Rat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

inline Rat rat_parse(const std::string& s) {
    try {
        return Rat(s);
    } catch (const std::exception&) {
        throw input_error("not a rational: '" + s + "'");
    }
}

inline bool rat_is_integer(const Rat& r) { return denominator(r) == 1; }

inline long rat_to_long(const Rat& r) {
    if (!rat_is_integer(r)) throw std::logic_error("rat_to_long: not an integer");
    return static_cast<long>(numerator(r));
}

} // namespace parcert
