#ifndef EXPSCHED_SIMULATOR_HPP
#define EXPSCHED_SIMULATOR_HPP

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "model.hpp"

namespace expsched {

	/// One slot's choice; empty means the machine idles.
	struct PolicyDecision {
		std::optional<JobId> job;

		static PolicyDecision idle() { return {}; }
		static PolicyDecision run(JobId id) { return {id}; }
		bool is_idle() const { return !job.has_value(); }
		bool operator==(const PolicyDecision&) const = default;
	};

	/// A released, incomplete job as a policy sees it. For exponential jobs
	/// `value` is the current penalty s' at the view's clock, for linear jobs w.
	struct ActiveJob {
		JobId id;
		JobClass cls;
		BigInt value;
		Time remaining;
	};

	/// Static constants handed to partial-online policies only.
	struct InstanceConstants {
		BigInt max_weight;
		std::optional<BigInt> min_start_penalty;
	};

	struct PolicyView {
		Time clock = 0;
		Base x = 2;
		std::vector<ActiveJob> active;   // ascending id
		std::optional<InstanceConstants> constants;
	};

	struct Policy {
		std::string name;
		std::function<PolicyDecision(const PolicyView&)> choose;
		bool partial_online = false;
	};

	struct SimState {
		Time clock = 0;
		std::vector<Time> remaining;
		std::vector<std::optional<Time>> completions;

		static SimState initial(const Instance& instance);
		bool done() const;
		bool has_active(const Instance& instance) const;
	};

	/// decisions[k] is the job processed in slot [k, k+1).
	struct Trace {
		std::optional<std::uint64_t> fingerprint;
		std::vector<PolicyDecision> decisions;

		std::size_t size() const { return decisions.size(); }
		bool operator==(const Trace&) const = default;
	};

	struct PenaltyReport {
		std::vector<BigInt> per_job;
		std::vector<Time> completions;
		BigInt total = 0;
		std::optional<Ratio> ratio_vs;

		/// Sets ratio_vs = total / reference.
		void compare_against(const BigInt& reference);
	};

	struct RunResult {
		Trace trace;
		PenaltyReport report;
	};

	/// Advances one slot. Throws Error(InfeasibleDecision | WorkConservation).
	SimState step(SimState state, const Instance& instance, const PolicyDecision& decision);

	PolicyView make_view(const SimState& state, const Instance& instance, bool with_constants);

	RunResult run_policy(const Instance& instance, const Policy& policy);

	/// Replays a trace, validating every invariant; errors name the offending slot.
	PenaltyReport penalty_of_trace(const Instance& instance, const Trace& trace);

	std::string trace_to_csv(const Trace& trace);
	Trace trace_from_csv(std::string_view text);

} // namespace expsched

#endif
