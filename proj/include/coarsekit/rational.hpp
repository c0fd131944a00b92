#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>

namespace coarsekit {

// Exact rational arithmetic end to end; no floats anywhere in the toolkit.
using Rat = boost::rational<std::int64_t>;

inline std::string rat_string(const Rat& r) {
    std::string s = std::to_string(r.numerator());
    if (r.denominator() != 1)
        s += "/" + std::to_string(r.denominator());
    return s;
}

} // namespace coarsekit
