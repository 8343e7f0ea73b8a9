#include "expsched/experiments.hpp"

#include <algorithm>

#include "expsched/error.hpp"

namespace expsched {

	namespace {

		// n * ceil(log_x(M n / s_min)), the log clamped to at least 1.
		BigInt n_log_term(const Instance& instance)
		{
			const BigInt n = instance.size();
			const Ratio q(instance.max_weight() * n, *instance.min_start_penalty());
			const std::int64_t lg = std::max<std::int64_t>(1, ceil_log(instance.base(), q));
			return n * lg;
		}

	} // namespace

	bool ComparisonReport::hard_bounds_hold() const
	{
		for (const auto& o : outcomes)
			if (o.bound && o.bound->hard && o.bound->pass == false)
				return false;
		return true;
	}

	bool SweepReport::hard_bounds_hold() const
	{
		return std::all_of(items.begin(), items.end(), [](const ComparisonReport& r) { return r.hard_bounds_hold(); });
	}

	std::optional<BoundCheck> applicable_bound(const Instance& instance, PolicyKind policy)
	{
		const bool lin = instance.has_linear();
		const bool exp = instance.has_exponential();
		const Base x = instance.base();

		if (exp && !lin) {
			if (policy != PolicyKind::ExpFirst && policy != PolicyKind::Threshold)
				return std::nullopt;
			return BoundCheck{"case1-exp-ordering", Ratio(BigInt(2 * x - 1), BigInt(x - 1)), std::nullopt,
			                  policy == PolicyKind::ExpFirst};
		}
		if (lin && !exp) {
			if (policy != PolicyKind::MaxWeight && policy != PolicyKind::ExpFirst && policy != PolicyKind::Threshold)
				return std::nullopt;
			return BoundCheck{"case2-max-weight", Ratio(BigInt(instance.size())), std::nullopt,
			                  policy != PolicyKind::Threshold};
		}
		if (policy == PolicyKind::ExpFirst)
			return BoundCheck{"expfirst-nlog", Ratio(n_log_term(instance)), std::nullopt, true};
		if (policy == PolicyKind::Threshold) {
			const Ratio m_over_s(instance.max_weight(), *instance.min_start_penalty());
			return BoundCheck{"threshold-sqrt-nlog", Ratio(4 * ceil_sqrt(m_over_s) + n_log_term(instance)),
			                  std::nullopt, false};
		}
		return std::nullopt;
	}

	ComparisonReport compare(const Instance& instance, const std::vector<PolicyKind>& policies,
	                         const OracleLimits& limits, const PolicyOptions& options, std::string instance_id)
	{
		ComparisonReport report;
		report.instance_id = std::move(instance_id);
		try {
			OracleResult opt = optimal_cost(instance, limits);
			report.oracle_total = std::move(opt.total);
			report.oracle_trace = std::move(opt.trace);
		} catch (const Error& e) {
			if (e.kind() != ErrorKind::BudgetExceeded)
				throw;
			report.oracle_error = e.what();
		}

		for (PolicyKind kind : policies) {
			PolicyOutcome outcome{kind, std::nullopt, std::nullopt, std::nullopt, std::nullopt, {}};
			try {
				RunResult run = run_policy(instance, make_policy(kind, options));
				outcome.total = run.report.total;
				outcome.trace = std::move(run.trace);
			} catch (const Error& e) {
				if (e.kind() != ErrorKind::UnsupportedInstance && e.kind() != ErrorKind::Configuration)
					throw;
				outcome.error = e.what();
			}
			if (outcome.total) {
				outcome.bound = applicable_bound(instance, kind);
				if (report.oracle_total) {
					outcome.ratio = Ratio(*outcome.total, *report.oracle_total);
					if (outcome.bound)
						outcome.bound->pass = *outcome.ratio <= outcome.bound->value;
				}
			}
			report.outcomes.push_back(std::move(outcome));
		}
		return report;
	}

	DominanceResult check_potential_dominance(const Instance& instance, const OracleLimits& limits,
	                                          ExpOrdering ordering)
	{
		if (instance.has_linear())
			throw Error(ErrorKind::UnsupportedInstance, "potential dominance needs an exponential-only instance");
		if (!instance.common_release())
			throw Error(ErrorKind::UnsupportedInstance, "potential dominance needs a common release");

		PolicyOptions options;
		options.ordering = ordering;
		DominanceResult result;
		result.policy_trace = run_policy(instance, make_policy(PolicyKind::ExpFirst, options)).trace;
		result.optimal_trace = optimal_cost(instance, limits).trace;
		result.policy_series = max_potential_series(instance, result.policy_trace);
		result.optimal_series = max_potential_series(instance, result.optimal_trace);

		const std::size_t len = std::max(result.policy_series.size(), result.optimal_series.size());
		for (std::size_t k = 0; k < len; ++k) {
			const BigInt ours = k < result.policy_series.size() ? result.policy_series[k] : BigInt(0);
			const BigInt theirs = k < result.optimal_series.size() ? result.optimal_series[k] : BigInt(0);
			if (ours > theirs) {
				result.first_violation = k;
				break;
			}
		}
		result.pass = !result.first_violation;
		return result;
	}

	std::string report_csv(const std::vector<ComparisonReport>& reports)
	{
		std::string out = "instance_id,policy,total,opt,ratio_num,ratio_den,bound_name,bound_pass\n";
		for (const auto& r : reports) {
			const std::string opt = r.oracle_total ? r.oracle_total->str() : "na";
			for (const auto& o : r.outcomes) {
				out += r.instance_id + ',' + to_string(o.policy) + ',';
				out += o.total ? o.total->str() : "error";
				out += ',' + opt + ',';
				if (o.ratio)
					out += boost::multiprecision::numerator(*o.ratio).str() + ',' +
					       boost::multiprecision::denominator(*o.ratio).str() + ',';
				else
					out += "na,na,";
				if (o.bound) {
					out += o.bound->name + ',';
					out += !o.bound->pass ? "na" : (*o.bound->pass ? "pass" : "fail");
				} else {
					out += "none,na";
				}
				out += '\n';
			}
		}
		return out;
	}

	std::string summary_text(const SweepReport& report)
	{
		std::size_t failures = 0;
		std::size_t no_oracle = 0;
		for (const auto& r : report.items) {
			if (!r.oracle_total)
				++no_oracle;
			for (const auto& o : r.outcomes)
				if (o.bound && o.bound->pass == false)
					++failures;
		}
		std::string out = "instances: " + std::to_string(report.items.size()) + "\n";
		out += "oracle unavailable: " + std::to_string(no_oracle) + "\n";
		for (const auto& [kind, ratio] : report.max_ratio)
			out += "max ratio " + std::string(to_string(kind)) + ": " + to_string(ratio) + " (~" +
			       to_decimal(ratio, 4) + ")\n";
		out += "bound violations: " + std::to_string(failures) + "\n";
		return out;
	}

} // namespace expsched
