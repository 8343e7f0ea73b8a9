#ifndef EXPSCHED_EXACT_HPP
#define EXPSCHED_EXACT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace expsched {

	// Exponential penalties overflow any fixed-width type after a few dozen
	// slots, so every penalty and key is carried as an exact number.
	using BigInt = boost::multiprecision::cpp_int;
	using Ratio = boost::multiprecision::cpp_rational;

	using Time = std::int64_t;
	using Base = std::uint32_t;

	/// base^exponent, exact. exponent must be non-negative.
	BigInt power(Base base, Time exponent);

	/// Smallest integer k with base^k >= q (q > 0). May be zero or negative.
	std::int64_t ceil_log(Base base, const Ratio& q);

	/// Exact log_base(value) when value is a non-negative integral power of base.
	std::optional<std::int64_t> exact_log(Base base, const BigInt& value);

	/// Smallest non-negative integer r with r*r >= q (q >= 0).
	BigInt ceil_sqrt(const Ratio& q);

	/// Parses an optionally signed decimal integer; throws Error(Parse) otherwise.
	BigInt parse_bigint(std::string_view text);

	std::string to_string(const BigInt& v);
	std::string to_string(const Ratio& r);

	/// Decimal rendering for humans only; never used for decisions.
	std::string to_decimal(const Ratio& r, int digits = 6);

} // namespace expsched

#endif
