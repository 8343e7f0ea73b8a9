#ifndef EXPSCHED_INSTANCES_HPP
#define EXPSCHED_INSTANCES_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include "model.hpp"

namespace expsched {

	/// Two jobs at r=0: linear (w=M, t=log_x(M/s)) and exponential (s, t=T).
	/// The greatest-penalty-first rule runs the linear job first and pays
	/// roughly M/s times the optimum as T grows.
	Instance gen_naive_lb(const BigInt& M, Base x, const BigInt& s, Time T);

	/// n copies of an exponential job (s, t) released at 0.
	Instance gen_identical_exp(std::size_t n, const BigInt& s, Time t, Base x);

	/// One exponential job (s, t = log_x(Mk/s) + alpha) and k unit linear jobs of weight M.
	Instance gen_case3(std::size_t k, const BigInt& M, const BigInt& s, Base x, Time alpha);

	enum class Family { NaiveLB, IdenticalExp, Case3, Random };
	enum class ClassMix { Mixed, LinearOnly, ExpOnly };

	const char* to_string(Family family);
	Family parse_family(std::string_view name);
	const char* to_string(ClassMix mix);
	ClassMix parse_class_mix(std::string_view name);

	/// Parameters for every family; each family reads only its own.
	struct GeneratorSpec {
		Family family = Family::Random;

		// naive-lb, case3, identical-exp
		std::int64_t M = 16;
		std::int64_t x = 2;
		std::int64_t s = 1;
		std::int64_t T = 12;
		std::int64_t n = 2;
		std::int64_t t = 2;
		std::int64_t k = 1;
		std::int64_t alpha = 0;

		// random
		std::uint64_t seed = 1;
		std::int64_t n_min = 1;
		std::int64_t n_max = 4;
		std::int64_t t_max = 3;
		std::int64_t r_max = 2;
		std::int64_t v_max = 8;
		ClassMix classes = ClassMix::Mixed;
		bool same_release = false;

		/// Sets a parameter by its CLI/grid name (M, x, s, T, n, t, k, alpha,
		/// seed, n_min, n_max, t_max, r_max, v_max). Throws Error(Parameter).
		void set(std::string_view name, std::int64_t value);
	};

	/// Seeded random instance. The stream is std::mt19937_64 seeded with
	/// `seed`; a draw in [lo, hi] is lo + (next() mod (hi - lo + 1)). The job
	/// count is drawn first from [n_min, n_max]. Then per job,
	/// in id order: class (Mixed only, low bit of one draw), release (skipped
	/// when same_release), work, value. A mixed instance with n >= 2 whose
	/// draws produced one class flips its last job to the other class.
	Instance gen_random(const GeneratorSpec& spec);

	Instance generate(const GeneratorSpec& spec);

	/// JSON: {"x": int, "jobs": [{"id", "class": "linear"|"exp", "r", "t", "w"|"s"}]}.
	/// Integers may exceed 64 bits; unknown keys are rejected.
	Instance parse_instance(std::string_view text);
	std::string serialize_instance(const Instance& instance);

	Instance load_instance(const std::string& path);
	void save_instance(const Instance& instance, const std::string& path);

} // namespace expsched

#endif
