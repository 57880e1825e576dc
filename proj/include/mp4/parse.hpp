#pragma once

#include "mp4/root_data.hpp"

#include <string>

namespace mp4 {

// Parses a weight expression: signed sum of terms, each a product of at most
// one rational factor, at most one free variable, and exactly one basis
// symbol (a1..a4, b1, b2), e.g. "a3/2", "1/2*a1 + a3", "t*a2/2 + z*a4/2".
Weight parse_weight(const std::string& text);

// Parses "p/q" or "p".
Rat parse_rat(const std::string& text);

} // namespace mp4
