#pragma once

// doctest printers for the library types.

#include "doctest.h"

#include "ajcable/format.hpp"
#include "ajcable/qtorus.hpp"

namespace doctest {

template <>
struct StringMaker<ajcable::IntLaurent1> {
    static String convert(const ajcable::IntLaurent1& f) { return ajcable::to_text(f).c_str(); }
};
template <>
struct StringMaker<ajcable::IntLaurent2> {
    static String convert(const ajcable::IntLaurent2& f) { return ajcable::to_text(f).c_str(); }
};
template <>
struct StringMaker<ajcable::RationalTM> {
    static String convert(const ajcable::RationalTM& f) { return ajcable::to_text(f).c_str(); }
};
template <>
struct StringMaker<ajcable::RationalM> {
    static String convert(const ajcable::RationalM& f) { return ajcable::to_text(f).c_str(); }
};
template <>
struct StringMaker<ajcable::SkewOperator> {
    static String convert(const ajcable::SkewOperator& f) { return ajcable::to_text(f).c_str(); }
};

}  // namespace doctest
