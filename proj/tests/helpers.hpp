#pragma once

#include "charclass/text.hpp"

#include <doctest.h>

namespace test {

using namespace charclass;

inline RatFun R(unsigned p, std::string_view s) { return parse_ratfun(s, p); }

inline PresentationPtr ring(std::vector<Generator> gens) { return make_presentation(std::move(gens)); }

inline K0Element el(const PresentationPtr& pres, std::string_view s) { return parse_element(s, pres); }

} // namespace test

namespace doctest {
template <>
struct StringMaker<charclass::RatFun> {
    static String convert(const charclass::RatFun& f) { return charclass::to_string(f).c_str(); }
};
template <>
struct StringMaker<charclass::K0Element> {
    static String convert(const charclass::K0Element& x) { return charclass::to_string(x).c_str(); }
};
template <>
struct StringMaker<charclass::SkewPoly> {
    static String convert(const charclass::SkewPoly& x) { return charclass::to_string(x).c_str(); }
};
} // namespace doctest
