#pragma once

// (1+i)-ary expansions sum_j v_j (1+i)^j with digits v_j in {0, +-1, +-i}.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gaussphi/gaussian.hpp"

namespace gaussphi {

enum class Digit : std::int8_t { Zero, One, MinusOne, I, MinusI };

GaussInt digit_value(Digit d);
std::string_view to_string(Digit d);
Digit parse_digit(std::string_view text);

// Little-endian: digits[j] multiplies (1+i)^j.
struct Expansion {
    std::vector<Digit> digits;

    std::size_t length() const { return digits.size(); }
    friend bool operator==(const Expansion&, const Expansion&) = default;
};

GaussInt evaluate(const Expansion& e);

enum class ExpandMethod {
    Greedy,        // forced zeros, first unit whose quotient stays in the right B-level
    Backtracking,  // depth-first over units, pruned only by octagon bounds (debug)
};

// An expansion of x != 0 with phi(x)+1 digits. Ties between units are broken in the
// order +1, -1, +i, -i.
Expansion expand_min(GaussInt x, ExpandMethod method = ExpandMethod::Greedy);

// "0,0,0,0,-1": comma-separated, index 0 first, alphabet {0, 1, -1, i, -i}.
std::string format_digits(const Expansion& e);
Expansion parse_digits(std::string_view text);

}  // namespace gaussphi
