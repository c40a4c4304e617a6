#ifndef BDCASE_FOUR_VALUE_HPP
#define BDCASE_FOUR_VALUE_HPP

#include <array>
#include <string>

namespace bdcase {

// One of the four information states. Encoded as a (pos, neg) bit pair:
// T=(1,0), B=(1,1), N=(0,0), F=(0,1).
enum class FourValue : unsigned char { T, B, N, F };

inline bool pos_bit(FourValue v) { return v == FourValue::T || v == FourValue::B; }
inline bool neg_bit(FourValue v) { return v == FourValue::F || v == FourValue::B; }

inline FourValue from_bits(bool pos, bool neg) {
    if (pos) return neg ? FourValue::B : FourValue::T;
    return neg ? FourValue::F : FourValue::N;
}

// Truth order: F bottom, T top, B and N incomparable.
inline bool le4(FourValue a, FourValue b) {
    return pos_bit(a) <= pos_bit(b) && neg_bit(a) >= neg_bit(b);
}

inline FourValue neg4(FourValue a) { return from_bits(neg_bit(a), pos_bit(a)); }

inline FourValue delta4(FourValue a) { return from_bits(pos_bit(a), !pos_bit(a)); }

// Meet in the truth order.
inline FourValue and4(FourValue a, FourValue b) {
    return from_bits(pos_bit(a) && pos_bit(b), neg_bit(a) || neg_bit(b));
}

// Join in the truth order.
inline FourValue or4(FourValue a, FourValue b) {
    return from_bits(pos_bit(a) || pos_bit(b), neg_bit(a) && neg_bit(b));
}

inline const char* to_string(FourValue v) {
    switch (v) {
        case FourValue::T: return "T";
        case FourValue::B: return "B";
        case FourValue::N: return "N";
        case FourValue::F: return "F";
    }
    return "?";
}

inline constexpr std::array<FourValue, 4> all_four_values{
    FourValue::T, FourValue::B, FourValue::N, FourValue::F};

} // namespace bdcase

#endif
