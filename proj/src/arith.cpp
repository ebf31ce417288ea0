#include "pretzel/arith.hpp"

#include <algorithm>

namespace pretzel {

std::string to_string_128(int128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    // int128 min cannot appear here: every value passed in is a product of
    // checked operations that already reject it.
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
    std::string out;
    while (u > 0) {
        out.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (neg) out.push_back('-');
    std::reverse(out.begin(), out.end());
    return out;
}

std::string Rational::str() const {
    if (den == 1) return to_string_128(num);
    return to_string_128(num) + "/" + to_string_128(den);
}

} // namespace pretzel
