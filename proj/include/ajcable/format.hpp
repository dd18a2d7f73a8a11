#pragma once

// Canonical text rendering: "c*t^a*M^b" terms joined by " + " / " - ".

#include "ajcable/laurent.hpp"
#include "ajcable/rational.hpp"

#include <string>
#include <string_view>

namespace ajcable {

std::string to_text(const IntLaurent1& f, char var = 't');
std::string to_text(const IntLaurent2& f);
// "num" when the denominator is 1, otherwise "(num)/(den)".
std::string to_text(const RationalTM& f);
std::string to_text(const RationalM& f);

// Inverse of to_text for polynomials; also accepts ascending order and
// terms like "3*t^2*M^-1". Throws std::invalid_argument on malformed input.
IntLaurent2 parse_laurent2(std::string_view text);
IntLaurent1 parse_laurent1(std::string_view text, char var = 't');

}  // namespace ajcable
