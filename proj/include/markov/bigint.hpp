#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace markov {

using BigInt = mpz_class;

inline std::string to_decimal(const BigInt& v) { return v.get_str(10); }

/// Parses an optionally signed run of decimal digits. Throws DomainError.
BigInt parse_decimal(std::string_view text);

}  // namespace markov
