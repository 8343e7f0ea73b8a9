#include "expsched/simulator.hpp"

#include <algorithm>
#include <sstream>

#include "expsched/error.hpp"

namespace expsched {

	SimState SimState::initial(const Instance& instance)
	{
		SimState s;
		for (const auto& j : instance.jobs())
			s.remaining.push_back(j.work);
		s.completions.assign(instance.size(), std::nullopt);
		return s;
	}

	bool SimState::done() const
	{
		return std::all_of(remaining.begin(), remaining.end(), [](Time r) { return r == 0; });
	}

	bool SimState::has_active(const Instance& instance) const
	{
		for (const auto& j : instance.jobs())
			if (j.release <= clock && remaining[j.id] > 0)
				return true;
		return false;
	}

	void PenaltyReport::compare_against(const BigInt& reference)
	{
		if (reference <= 0)
			throw Error(ErrorKind::Parameter, "ratio against a non-positive reference");
		ratio_vs = Ratio(total, reference);
	}

	SimState step(SimState state, const Instance& instance, const PolicyDecision& decision)
	{
		if (decision.is_idle()) {
			if (state.has_active(instance))
				throw Error(ErrorKind::WorkConservation,
				            "idle at slot " + std::to_string(state.clock) + " with released work pending");
		} else {
			const JobId id = *decision.job;
			if (id >= instance.size())
				throw Error(ErrorKind::InfeasibleDecision, "unknown job " + std::to_string(id));
			const JobSpec& job = instance.job(id);
			if (job.release > state.clock)
				throw Error(ErrorKind::InfeasibleDecision,
				            "job " + std::to_string(id) + " chosen at slot " + std::to_string(state.clock) +
				            " before its release " + std::to_string(job.release));
			if (state.remaining[id] == 0)
				throw Error(ErrorKind::InfeasibleDecision,
				            "job " + std::to_string(id) + " chosen at slot " + std::to_string(state.clock) +
				            " after completing");
			if (--state.remaining[id] == 0)
				state.completions[id] = state.clock + 1;
		}
		++state.clock;
		return state;
	}

	PolicyView make_view(const SimState& state, const Instance& instance, bool with_constants)
	{
		PolicyView view;
		view.clock = state.clock;
		view.x = instance.base();
		for (const auto& j : instance.jobs()) {
			if (j.release > state.clock || state.remaining[j.id] == 0)
				continue;
			view.active.push_back(ActiveJob{j.id, j.cls, current_penalty(j, state.clock, instance.base()),
			                                state.remaining[j.id]});
		}
		if (with_constants)
			view.constants = InstanceConstants{instance.max_weight(), instance.min_start_penalty()};
		return view;
	}

	namespace {

		PenaltyReport report_from(const Instance& instance, const std::vector<std::optional<Time>>& completions)
		{
			PenaltyReport report;
			for (const auto& j : instance.jobs()) {
				const Time c = *completions[j.id];
				report.completions.push_back(c);
				report.per_job.push_back(completion_penalty(j, c, instance.base()));
				report.total += report.per_job.back();
			}
			return report;
		}

	} // namespace

	RunResult run_policy(const Instance& instance, const Policy& policy)
	{
		RunResult result;
		result.trace.fingerprint = instance.fingerprint();
		SimState state = SimState::initial(instance);
		const Time horizon = instance.horizon();
		while (!state.done()) {
			if (state.clock > horizon)
				throw Error(ErrorKind::WorkConservation, "policy " + policy.name + " ran past the horizon");
			const PolicyDecision decision = policy.choose(make_view(state, instance, policy.partial_online));
			state = step(std::move(state), instance, decision);
			result.trace.decisions.push_back(decision);
		}
		result.report = report_from(instance, state.completions);
		return result;
	}

	PenaltyReport penalty_of_trace(const Instance& instance, const Trace& trace)
	{
		if (trace.fingerprint && *trace.fingerprint != instance.fingerprint())
			throw Error(ErrorKind::TraceInvariant, "trace was recorded for a different instance");

		std::vector<Time> remaining;
		for (const auto& j : instance.jobs())
			remaining.push_back(j.work);
		std::vector<std::optional<Time>> completions(instance.size());

		for (std::size_t k = 0; k < trace.decisions.size(); ++k) {
			const auto& d = trace.decisions[k];
			if (d.is_idle())
				continue;
			const Time slot = static_cast<Time>(k);
			const JobId id = *d.job;
			if (id >= instance.size())
				throw Error(ErrorKind::TraceInvariant, "slot " + std::to_string(k) + ": unknown job " + std::to_string(id));
			if (instance.job(id).release > slot)
				throw Error(ErrorKind::TraceInvariant,
				            "slot " + std::to_string(k) + ": job " + std::to_string(id) + " not yet released");
			if (remaining[id] == 0)
				throw Error(ErrorKind::TraceInvariant,
				            "slot " + std::to_string(k) + ": job " + std::to_string(id) + " already complete");
			if (--remaining[id] == 0)
				completions[id] = slot + 1;
		}
		for (const auto& j : instance.jobs())
			if (remaining[j.id] != 0)
				throw Error(ErrorKind::TraceInvariant,
				            "job " + std::to_string(j.id) + " received " + std::to_string(j.work - remaining[j.id]) +
				            " of " + std::to_string(j.work) + " units");
		return report_from(instance, completions);
	}

	std::string trace_to_csv(const Trace& trace)
	{
		std::string out = "slot,job_id\n";
		for (std::size_t k = 0; k < trace.decisions.size(); ++k) {
			out += std::to_string(k);
			out += ',';
			const auto& d = trace.decisions[k];
			out += d.is_idle() ? std::string("idle") : std::to_string(*d.job);
			out += '\n';
		}
		return out;
	}

	Trace trace_from_csv(std::string_view text)
	{
		std::istringstream in{std::string(text)};
		std::string line;
		if (!std::getline(in, line) || (line != "slot,job_id" && line != "slot,job_id\r"))
			throw Error(ErrorKind::Parse, "trace CSV must start with header 'slot,job_id'");
		Trace trace;
		while (std::getline(in, line)) {
			if (!line.empty() && line.back() == '\r')
				line.pop_back();
			if (line.empty())
				continue;
			const auto comma = line.find(',');
			if (comma == std::string::npos)
				throw Error(ErrorKind::Parse, "trace row without a comma: '" + line + "'");
			const BigInt slot = parse_bigint(std::string_view(line).substr(0, comma));
			if (slot != trace.decisions.size())
				throw Error(ErrorKind::Parse, "trace slots must be contiguous from 0; got " + slot.str());
			const std::string job = line.substr(comma + 1);
			if (job == "idle") {
				trace.decisions.push_back(PolicyDecision::idle());
			} else {
				const BigInt id = parse_bigint(job);
				if (id < 0 || id > std::numeric_limits<JobId>::max())
					throw Error(ErrorKind::Parse, "job id out of range: " + job);
				trace.decisions.push_back(PolicyDecision::run(static_cast<JobId>(id)));
			}
		}
		return trace;
	}

} // namespace expsched
