#include "expsched/exact.hpp"

#include <cctype>

#include "expsched/error.hpp"

namespace expsched {

	const char* to_string(ErrorKind kind)
	{
		switch (kind) {
		case ErrorKind::ReleaseViolation: return "release violation";
		case ErrorKind::InfeasibleCompletion: return "infeasible completion";
		case ErrorKind::CompletedJob: return "completed job";
		case ErrorKind::InfeasibleDecision: return "infeasible decision";
		case ErrorKind::WorkConservation: return "work-conservation violation";
		case ErrorKind::TraceInvariant: return "trace invariant violation";
		case ErrorKind::Configuration: return "configuration error";
		case ErrorKind::UnsupportedInstance: return "unsupported instance";
		case ErrorKind::BudgetExceeded: return "state budget exceeded";
		case ErrorKind::Parameter: return "parameter error";
		case ErrorKind::Parse: return "parse error";
		case ErrorKind::InvalidInstance: return "invalid instance";
		}
		return "error";
	}

	BigInt power(Base base, Time exponent)
	{
		if (exponent < 0)
			throw Error(ErrorKind::Parameter, "negative exponent");
		return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exponent));
	}

	std::int64_t ceil_log(Base base, const Ratio& q)
	{
		if (base < 2 || q <= 0)
			throw Error(ErrorKind::Parameter, "ceil_log needs base >= 2 and q > 0");
		std::int64_t k = 0;
		if (q >= 1) {
			BigInt p = 1;
			while (Ratio(p) < q) {
				p *= base;
				++k;
			}
		} else {
			// x^(k-1) >= q  <=>  1 >= q * x^(1-k)
			BigInt scale = 1;
			while (q * Ratio(scale * base) <= 1) {
				scale *= base;
				--k;
			}
		}
		return k;
	}

	std::optional<std::int64_t> exact_log(Base base, const BigInt& value)
	{
		if (base < 2 || value < 1)
			return std::nullopt;
		std::int64_t k = 0;
		BigInt v = value;
		while (v % base == 0) {
			v /= base;
			++k;
		}
		if (v != 1)
			return std::nullopt;
		return k;
	}

	BigInt ceil_sqrt(const Ratio& q)
	{
		if (q < 0)
			throw Error(ErrorKind::Parameter, "ceil_sqrt of a negative number");
		const BigInt num = boost::multiprecision::numerator(q);
		const BigInt den = boost::multiprecision::denominator(q);
		// r*r is an integer, so r*r >= q iff r*r >= ceil(q).
		const BigInt c = (num + den - 1) / den;
		BigInt r = boost::multiprecision::sqrt(c);
		if (r * r < c)
			++r;
		return r;
	}

	BigInt parse_bigint(std::string_view text)
	{
		std::size_t i = 0;
		if (!text.empty() && (text[0] == '-' || text[0] == '+'))
			i = 1;
		if (i == text.size())
			throw Error(ErrorKind::Parse, "expected an integer, got '" + std::string(text) + "'");
		for (std::size_t j = i; j < text.size(); ++j)
			if (!std::isdigit(static_cast<unsigned char>(text[j])))
				throw Error(ErrorKind::Parse, "expected an integer, got '" + std::string(text) + "'");
		BigInt v(std::string(text.substr(i)));
		return text[0] == '-' ? BigInt(-v) : v;
	}

	std::string to_string(const BigInt& v)
	{
		return v.str();
	}

	std::string to_string(const Ratio& r)
	{
		const BigInt den = boost::multiprecision::denominator(r);
		if (den == 1)
			return boost::multiprecision::numerator(r).str();
		return boost::multiprecision::numerator(r).str() + "/" + den.str();
	}

	std::string to_decimal(const Ratio& r, int digits)
	{
		BigInt num = boost::multiprecision::numerator(r);
		const BigInt den = boost::multiprecision::denominator(r);
		std::string out;
		if (num < 0) {
			out += '-';
			num = -num;
		}
		BigInt whole = num / den;
		BigInt frac = num % den;
		out += whole.str();
		if (digits > 0) {
			out += '.';
			for (int i = 0; i < digits; ++i) {
				frac *= 10;
				out += static_cast<char>('0' + static_cast<int>(frac / den));
				frac %= den;
			}
		}
		return out;
	}

} // namespace expsched
