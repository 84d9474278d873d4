#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace sphtile {

enum class CornerLabel : std::uint8_t { Alpha = 0, Beta = 1, Gamma = 2 };

char label_letter(CornerLabel label);            // 'a', 'b' or 'g'
std::string label_name(CornerLabel label);       // "alpha", ...

// Counts of alpha, beta and gamma corners meeting at one vertex.
struct VertexType {
    int alpha = 0;
    int beta = 0;
    int gamma = 0;

    int degree() const { return alpha + beta + gamma; }
    int count(CornerLabel label) const;

    auto operator<=>(const VertexType&) const = default;
};

// "a^i b^j c^k" with unit exponents and zero factors omitted, e.g. "a b c^2".
std::string to_string(const VertexType& v);
VertexType parse_vertex_type(const std::string& text);  // throws ParseError

}  // namespace sphtile
