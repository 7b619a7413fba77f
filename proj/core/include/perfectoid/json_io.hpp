#pragma once

#include <string>

#include "perfectoid/gauss.hpp"
#include "perfectoid/tilt.hpp"

namespace perfectoid {

// Wire formats. Exponents and norm values are always exact integers / flags,
// never decimals:
//   exponent     {"num": 3, "kpow": 1}
//   norm value   {"zero": true} | {"exp": {"num": ..., "kpow": ...}}
//   series       {"p": 2, "terms": [{"num":1,"kpow":1,"coeff":1}], "prec": {...}}
//   untilt       {"digits": [<series>...], "n": 3, "N": {...}}
//   fraction     {"num": <untilt>, "denomPow": 1}
//   ideal        {"kind":"zero"|"principal"|"augmentation", "var": 0, "bound": {...}, "d": 1}
//   gauss        {"coef":"charp"|"untilt", "d":1, "p":2, "terms":[{"exps":[...],"coeff":...}]}

std::string pexponent_to_json(const PExponent& e);
PExponent pexponent_from_json(const std::string& text, std::uint32_t p);

std::string norm_value_to_json(const NormValue& v);
NormValue norm_value_from_json(const std::string& text, std::uint32_t p);

std::string charp_to_json(const CharPSeries& f);
CharPSeries charp_from_json(const std::string& text);

std::string untilt_to_json(const UntiltElement& x);
UntiltElement untilt_from_json(const std::string& text);

std::string fraction_to_json(const UntiltFraction& x);
UntiltFraction fraction_from_json(const std::string& text);

std::string ideal_to_json(const MonomialIdeal& I);
MonomialIdeal ideal_from_json(const std::string& text, std::uint32_t p);

std::string gauss_to_json(const GaussElement& f);
GaussElement gauss_from_json(const std::string& text);

} // namespace perfectoid
