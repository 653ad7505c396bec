#include "gaussphi/expansion.hpp"

#include <array>
#include <stdexcept>

#include "gaussphi/regions.hpp"
#include "gaussphi/weights.hpp"

namespace gaussphi {

namespace {

constexpr std::array<Digit, 4> kUnitDigits{Digit::One, Digit::MinusOne, Digit::I, Digit::MinusI};

// Members of B_m; B_{-1} is {0}.
bool in_b(GaussInt x, int m) {
    if (m < 0) return x.is_zero();
    return in_region({RegionKind::B, m}, x);
}

std::optional<GaussInt> shift_down(GaussInt r, Digit d) {
    return div_exact(r - digit_value(d), kOnePlusI);
}

Expansion expand_greedy(GaussInt x, int length) {
    Expansion e;
    e.digits.reserve(static_cast<std::size_t>(length));
    GaussInt residual = x;
    for (int pos = 0; pos < length; ++pos) {
        // Digits still to place after this one: length - pos - 1, i.e. the quotient
        // must lie in B_{length - pos - 2}.
        const int next_level = length - pos - 2;
        bool placed = false;
        if (auto q = div_exact(residual, kOnePlusI); q && !residual.is_zero()) {
            if (in_b(*q, next_level)) {
                e.digits.push_back(Digit::Zero);
                residual = *q;
                placed = true;
            }
        } else {
            for (Digit d : kUnitDigits) {
                auto quotient = shift_down(residual, d);
                if (quotient && in_b(*quotient, next_level)) {
                    e.digits.push_back(d);
                    residual = *quotient;
                    placed = true;
                    break;
                }
            }
        }
        if (!placed)
            throw std::logic_error("expand_min: no admissible digit at position " + std::to_string(pos) +
                                   " for " + to_string(x));
    }
    if (!residual.is_zero()) throw std::logic_error("expand_min: nonzero residual for " + to_string(x));
    return e;
}

bool backtrack(GaussInt r, int left, std::vector<Digit>& digits) {
    if (left == 1) {
        for (Digit d : kUnitDigits) {
            if (digit_value(d) == r) {
                digits.push_back(d);
                return true;
            }
        }
        return false;
    }
    if (r.is_zero()) return false;
    if (auto q = div_exact(r, kOnePlusI)) {
        digits.push_back(Digit::Zero);
        if (backtrack(*q, left - 1, digits)) return true;
        digits.pop_back();
        return false;
    }
    for (Digit d : kUnitDigits) {
        auto q = shift_down(r, d);
        if (!q || q->is_zero() || !in_region({RegionKind::Oct, left - 2}, *q)) continue;
        digits.push_back(d);
        if (backtrack(*q, left - 1, digits)) return true;
        digits.pop_back();
    }
    return false;
}

}  // namespace

GaussInt digit_value(Digit d) {
    switch (d) {
        case Digit::Zero: return {0, 0};
        case Digit::One: return {1, 0};
        case Digit::MinusOne: return {-1, 0};
        case Digit::I: return {0, 1};
        case Digit::MinusI: return {0, -1};
    }
    return {0, 0};
}

std::string_view to_string(Digit d) {
    switch (d) {
        case Digit::Zero: return "0";
        case Digit::One: return "1";
        case Digit::MinusOne: return "-1";
        case Digit::I: return "i";
        case Digit::MinusI: return "-i";
    }
    return "?";
}

Digit parse_digit(std::string_view text) {
    if (text == "0") return Digit::Zero;
    if (text == "1") return Digit::One;
    if (text == "-1") return Digit::MinusOne;
    if (text == "i") return Digit::I;
    if (text == "-i") return Digit::MinusI;
    throw DomainError("invalid digit '" + std::string(text) + "'");
}

GaussInt evaluate(const Expansion& e) {
    GaussInt acc{0, 0};
    for (auto it = e.digits.rbegin(); it != e.digits.rend(); ++it) acc = acc * kOnePlusI + digit_value(*it);
    return acc;
}

Expansion expand_min(GaussInt x, ExpandMethod method) {
    if (x.is_zero()) throw DomainError("expand_min is defined for nonzero elements only");
    const int length = phi(x) + 1;
    if (method == ExpandMethod::Greedy) return expand_greedy(x, length);

    Expansion e;
    if (!backtrack(x, length, e.digits))
        throw std::logic_error("expand_min: backtracking found no expansion for " + to_string(x));
    return e;
}

std::string format_digits(const Expansion& e) {
    std::string out;
    for (std::size_t j = 0; j < e.digits.size(); ++j) {
        if (j) out += ',';
        out += to_string(e.digits[j]);
    }
    return out;
}

Expansion parse_digits(std::string_view text) {
    Expansion e;
    if (text.empty()) return e;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        e.digits.push_back(parse_digit(text.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return e;
}

}  // namespace gaussphi
