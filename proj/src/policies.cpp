#include "expsched/policies.hpp"

#include "expsched/error.hpp"

namespace expsched {

	ThresholdConfig ThresholdConfig::custom(Ratio tau)
	{
		if (tau <= 0)
			throw Error(ErrorKind::Configuration, "threshold tau must be positive");
		return ThresholdConfig{ThresholdVariant::Custom, std::move(tau)};
	}

	Ratio ThresholdConfig::tau_squared(const PolicyView& view) const
	{
		if (variant == ThresholdVariant::Custom)
			return custom_tau * custom_tau;
		if (!view.constants)
			throw Error(ErrorKind::Configuration, "threshold policy needs M and s_min in advance");
		const auto& c = *view.constants;
		if (!c.min_start_penalty)
			throw Error(ErrorKind::Configuration, "threshold policy needs s_min but the instance has no exponential job");
		if (variant == ThresholdVariant::StatedSqrtMOverSmin)
			return Ratio(c.max_weight, *c.min_start_penalty);
		return Ratio(c.max_weight * *c.min_start_penalty);
	}

	const char* to_string(PolicyKind kind)
	{
		switch (kind) {
		case PolicyKind::Naive: return "naive";
		case PolicyKind::Threshold: return "threshold";
		case PolicyKind::ExpFirst: return "expfirst";
		case PolicyKind::Smith: return "smith";
		case PolicyKind::MaxWeight: return "maxweight";
		}
		return "?";
	}

	PolicyKind parse_policy_kind(std::string_view name)
	{
		for (auto k : {PolicyKind::Naive, PolicyKind::Threshold, PolicyKind::ExpFirst, PolicyKind::Smith,
		               PolicyKind::MaxWeight})
			if (name == to_string(k))
				return k;
		throw Error(ErrorKind::Parameter, "unknown policy '" + std::string(name) + "'");
	}

	namespace {

		const ActiveJob* find_active(const PolicyView& view, JobId id)
		{
			for (const auto& a : view.active)
				if (a.id == id)
					return &a;
			return nullptr;
		}

		void require_linear_only(const PolicyView& view, const char* policy)
		{
			for (const auto& a : view.active)
				if (a.cls == JobClass::Exponential)
					throw Error(ErrorKind::UnsupportedInstance,
					            std::string(policy) + " handles linear jobs only; job " + std::to_string(a.id) +
					            " is exponential");
		}

	} // namespace

	std::optional<JobId> exp_queue_top(const PolicyView& view, ExpOrdering ordering)
	{
		const ActiveJob* best = nullptr;
		Ratio best_key;
		for (const auto& a : view.active) {
			if (a.cls != JobClass::Exponential)
				continue;
			Ratio key = ordering == ExpOrdering::MaxPotential ? Ratio(potential(a.value, a.remaining, view.x))
			                                                  : exp_order_key(a.value, a.remaining, view.x);
			if (!best || key > best_key) {
				best = &a;
				best_key = std::move(key);
			}
		}
		if (!best)
			return std::nullopt;
		return best->id;
	}

	std::optional<JobId> linear_queue_top(const PolicyView& view)
	{
		const ActiveJob* best = nullptr;
		for (const auto& a : view.active)
			if (a.cls == JobClass::Linear && (!best || a.value > best->value))
				best = &a;
		if (!best)
			return std::nullopt;
		return best->id;
	}

	PolicyDecision naive_choose(const PolicyView& view)
	{
		const ActiveJob* best = nullptr;
		for (const auto& a : view.active) {
			if (!best || a.value > best->value ||
			    (a.value == best->value && a.cls == JobClass::Linear && best->cls == JobClass::Exponential))
				best = &a;
		}
		return best ? PolicyDecision::run(best->id) : PolicyDecision::idle();
	}

	PolicyDecision threshold_choose(const PolicyView& view, const ThresholdConfig& cfg, ExpOrdering ordering)
	{
		if (cfg.variant != ThresholdVariant::Custom && !view.constants)
			throw Error(ErrorKind::Configuration, "threshold policy needs M and s_min in advance");

		const auto exp_top = exp_queue_top(view, ordering);
		const auto lin_top = linear_queue_top(view);
		if (exp_top && lin_top) {
			const ActiveJob* e = find_active(view, *exp_top);
			const BigInt p = potential(e->value, e->remaining, view.x);
			// potential > tau  <=>  potential^2 > tau^2, both sides positive
			if (Ratio(p * p) > cfg.tau_squared(view))
				return PolicyDecision::run(*exp_top);
			return PolicyDecision::run(*lin_top);
		}
		if (lin_top)
			return PolicyDecision::run(*lin_top);
		if (exp_top)
			return PolicyDecision::run(*exp_top);
		return PolicyDecision::idle();
	}

	PolicyDecision expfirst_choose(const PolicyView& view, ExpOrdering ordering)
	{
		if (auto e = exp_queue_top(view, ordering))
			return PolicyDecision::run(*e);
		if (auto l = linear_queue_top(view))
			return PolicyDecision::run(*l);
		return PolicyDecision::idle();
	}

	PolicyDecision smith_preemptive_choose(const PolicyView& view)
	{
		require_linear_only(view, "smith");
		const ActiveJob* best = nullptr;
		Ratio best_key;
		for (const auto& a : view.active) {
			Ratio key = smith_key(a.value, a.remaining);
			if (!best || key < best_key) {
				best = &a;
				best_key = std::move(key);
			}
		}
		return best ? PolicyDecision::run(best->id) : PolicyDecision::idle();
	}

	PolicyDecision maxweight_choose(const PolicyView& view)
	{
		require_linear_only(view, "maxweight");
		if (auto l = linear_queue_top(view))
			return PolicyDecision::run(*l);
		return PolicyDecision::idle();
	}

	Policy make_policy(PolicyKind kind, const PolicyOptions& options)
	{
		const auto ordering = options.ordering;
		switch (kind) {
		case PolicyKind::Naive:
			return {"naive", naive_choose};
		case PolicyKind::Threshold:
			return {"threshold",
			        [cfg = options.threshold, ordering](const PolicyView& v) { return threshold_choose(v, cfg, ordering); },
			        options.threshold.variant != ThresholdVariant::Custom};
		case PolicyKind::ExpFirst:
			return {"expfirst", [ordering](const PolicyView& v) { return expfirst_choose(v, ordering); }};
		case PolicyKind::Smith:
			return {"smith", smith_preemptive_choose};
		case PolicyKind::MaxWeight:
			return {"maxweight", maxweight_choose};
		}
		throw Error(ErrorKind::Parameter, "unknown policy kind");
	}

} // namespace expsched
