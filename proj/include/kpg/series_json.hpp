#pragma once

#include <string>
#include <string_view>

#include "kpg/series.hpp"

namespace kpg {

/// {"variable": "p", "order": N, "terms": [{"exponents": [e1, e2, ...],
/// "numerator": "3", "denominator": "2"}, ...]}, terms in canonical order.
/// Numerators and denominators are decimal strings so big values survive.
std::string to_json(const TruncSeries& a, int indent = 2);

/// Accepts the object form above or a bare terms array; the latter takes its
/// order and variable family from the defaults. Numerators and denominators
/// may be strings or integers, and "denominator" may be omitted. Malformed
/// input raises ParseError; monomials above the order raise OutOfTruncationError.
TruncSeries series_from_json(std::string_view text, int default_order = kDefaultOrder,
                             Variable default_var = Variable::p);

}  // namespace kpg
