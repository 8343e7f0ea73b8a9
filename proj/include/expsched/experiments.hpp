#ifndef EXPSCHED_EXPERIMENTS_HPP
#define EXPSCHED_EXPERIMENTS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "instances.hpp"
#include "oracle.hpp"
#include "policies.hpp"

namespace expsched {

	struct BoundCheck {
		std::string name;
		Ratio value;
		/// Empty when no optimum was available to form a ratio.
		std::optional<bool> pass;
		/// Hard bounds fail the run; soft ones (threshold policy) are only reported.
		bool hard = true;
	};

	struct PolicyOutcome {
		PolicyKind policy;
		std::optional<BigInt> total;
		std::optional<Ratio> ratio;
		std::optional<BoundCheck> bound;
		std::optional<std::string> error;
		Trace trace;
	};

	struct ComparisonReport {
		std::string instance_id;
		std::optional<BigInt> oracle_total;
		std::optional<std::string> oracle_error;
		Trace oracle_trace;
		std::vector<PolicyOutcome> outcomes;

		bool hard_bounds_hold() const;
	};

	/// The competitive bound claimed for `policy` on this instance, if any.
	/// Logs are base x and rounded up (at least 1); square roots rounded up, so
	/// every bound is an exact rational over-approximation of the real one.
	std::optional<BoundCheck> applicable_bound(const Instance& instance, PolicyKind policy);

	ComparisonReport compare(const Instance& instance, const std::vector<PolicyKind>& policies,
	                         const OracleLimits& limits = {}, const PolicyOptions& options = {},
	                         std::string instance_id = "instance");

	struct DominanceResult {
		bool pass = false;
		std::optional<std::size_t> first_violation;
		std::vector<BigInt> policy_series;
		std::vector<BigInt> optimal_series;
		Trace policy_trace;
		Trace optimal_trace;
	};

	/// Slot-by-slot comparison of the max-potential series of expfirst against
	/// the oracle's optimal trace. Exponential-only, common release.
	DominanceResult check_potential_dominance(const Instance& instance, const OracleLimits& limits = {},
	                                          ExpOrdering ordering = ExpOrdering::MaxPotential);

	struct GridAxis {
		std::string name;
		std::vector<std::int64_t> values;
	};

	/// Parses "name=a,b,c" or "name=lo..hi".
	GridAxis parse_grid_axis(std::string_view text);

	struct SweepConfig {
		GeneratorSpec base;
		std::vector<GridAxis> grid;
		std::vector<PolicyKind> policies;
		OracleLimits limits;
		PolicyOptions options;
	};

	struct SweepReport {
		std::vector<ComparisonReport> items;   // grid order, last axis fastest
		std::map<PolicyKind, Ratio> max_ratio;

		bool hard_bounds_hold() const;
	};

	/// Grid points in order, each as a generator spec plus an instance id.
	std::vector<std::pair<std::string, GeneratorSpec>> expand_grid(const SweepConfig& config);

	/// Grid items evaluated in parallel with OpenMP; the result is identical to sweep_serial.
	SweepReport sweep(const SweepConfig& config);
	SweepReport sweep_serial(const SweepConfig& config);

	/// Columns: instance_id,policy,total,opt,ratio_num,ratio_den,bound_name,bound_pass
	std::string report_csv(const std::vector<ComparisonReport>& reports);
	std::string summary_text(const SweepReport& report);

} // namespace expsched

#endif
