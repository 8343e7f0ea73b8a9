#ifndef EXPSCHED_ORACLE_HPP
#define EXPSCHED_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "simulator.hpp"

namespace expsched {

	struct OracleLimits {
		/// Upper bound on prod(t_i + 1) * (horizon + 1).
		std::uint64_t state_budget = 10'000'000;
	};

	struct OracleResult {
		BigInt total;
		Trace trace;
		std::uint64_t states_explored = 0;
	};

	/// Exact minimum total penalty over all preemptive schedules, by memoized
	/// search over (clock, remaining work). Throws Error(BudgetExceeded) rather
	/// than approximating.
	OracleResult optimal_cost(const Instance& instance, const OracleLimits& limits = {});

	struct PermutationResult {
		std::vector<JobId> order;
		BigInt cost;
	};

	/// Best non-preemptive sequence by enumerating all n! orders. Requires a
	/// common release and n <= 8.
	PermutationResult best_permutation_cost(const Instance& instance);

	/// Cost of running jobs back to back in the given order from the common release.
	BigInt sequence_cost(const Instance& instance, std::span<const JobId> order);

	/// Per slot, the largest potential among released incomplete jobs (0 if none).
	/// Exponential-only instances.
	std::vector<BigInt> max_potential_series(const Instance& instance, const Trace& trace);

} // namespace expsched

#endif
