#ifndef EXPSCHED_POLICIES_HPP
#define EXPSCHED_POLICIES_HPP

#include <optional>
#include <string>
#include <string_view>

#include "simulator.hpp"

namespace expsched {

	/// How the exponential queue picks its top.
	enum class ExpOrdering {
		MaxPotential,  // largest s' x^rem; rotates identical jobs
		SwapKey,       // largest s' x^rem / (x^rem - 1)
	};

	enum class ThresholdVariant {
		StatedSqrtMOverSmin,   // tau^2 = M / s_min
		DerivedSqrtMTimesSmin, // tau^2 = M * s_min
		Custom,
	};

	/// The threshold is kept squared so it can be compared exactly against
	/// integer potentials even when tau itself is irrational.
	struct ThresholdConfig {
		ThresholdVariant variant = ThresholdVariant::StatedSqrtMOverSmin;
		Ratio custom_tau = 0;

		static ThresholdConfig custom(Ratio tau);
		/// tau^2 for this view. Throws Error(Configuration) when the view lacks
		/// the partial-online constants the variant depends on.
		Ratio tau_squared(const PolicyView& view) const;
	};

	enum class PolicyKind { Naive, Threshold, ExpFirst, Smith, MaxWeight };

	const char* to_string(PolicyKind kind);
	/// Accepts the CLI names; throws Error(Parameter) otherwise.
	PolicyKind parse_policy_kind(std::string_view name);

	struct PolicyOptions {
		ExpOrdering ordering = ExpOrdering::MaxPotential;
		ThresholdConfig threshold;
	};

	std::optional<JobId> exp_queue_top(const PolicyView& view, ExpOrdering ordering = ExpOrdering::SwapKey);
	std::optional<JobId> linear_queue_top(const PolicyView& view);

	PolicyDecision naive_choose(const PolicyView& view);
	PolicyDecision threshold_choose(const PolicyView& view, const ThresholdConfig& cfg,
	                                ExpOrdering ordering = ExpOrdering::MaxPotential);
	PolicyDecision expfirst_choose(const PolicyView& view, ExpOrdering ordering = ExpOrdering::MaxPotential);
	PolicyDecision smith_preemptive_choose(const PolicyView& view);
	PolicyDecision maxweight_choose(const PolicyView& view);

	Policy make_policy(PolicyKind kind, const PolicyOptions& options = {});

} // namespace expsched

#endif
