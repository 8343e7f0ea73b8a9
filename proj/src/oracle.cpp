#include "expsched/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "expsched/error.hpp"

namespace expsched {

	namespace {

		constexpr std::int32_t kIdle = -1;

		struct Entry {
			BigInt cost;
			std::int32_t choice;
		};

		// Cost-to-go depends only on the clock and the remaining work vector;
		// the remaining vector is packed in mixed radix (t_i + 1).
		class Search {
		public:
			Search(const Instance& instance, const OracleLimits& limits)
			: inst_(instance), remaining_(instance.size())
			{
				BigInt radix = 1;
				for (const auto& j : inst_.jobs()) {
					stride_.push_back(static_cast<std::uint64_t>(radix));
					radix *= j.work + 1;
					if (radix > BigInt(limits.state_budget))
						break;
				}
				const BigInt states = radix * (inst_.horizon() + 1);
				if (states > BigInt(limits.state_budget))
					throw Error(ErrorKind::BudgetExceeded,
					            "oracle needs " + states.str() + " states, budget is " +
					            std::to_string(limits.state_budget));
				radix_ = static_cast<std::uint64_t>(radix);
				memo_.reserve(static_cast<std::size_t>(std::min<BigInt>(states, BigInt(1u << 20))));
			}

			OracleResult run()
			{
				std::uint64_t code = 0;
				for (const auto& j : inst_.jobs()) {
					remaining_[j.id] = j.work;
					code += stride_[j.id] * static_cast<std::uint64_t>(j.work);
				}
				OracleResult result;
				result.total = solve(0, code);
				result.trace = reconstruct(code);
				result.states_explored = memo_.size();
				return result;
			}

		private:
			BigInt solve(Time clock, std::uint64_t code)
			{
				if (code == 0)
					return 0;
				const std::uint64_t key = static_cast<std::uint64_t>(clock) * radix_ + code;
				if (auto it = memo_.find(key); it != memo_.end())
					return it->second.cost;

				Entry best{0, kIdle};
				bool found = false;
				for (const auto& j : inst_.jobs()) {
					if (j.release > clock || remaining_[j.id] == 0)
						continue;
					Time& rem = remaining_[j.id];
					--rem;
					BigInt cost = solve(clock + 1, code - stride_[j.id]);
					if (rem == 0)
						cost += completion_penalty(j, clock + 1, inst_.base());
					++rem;
					if (!found || cost < best.cost) {
						best = Entry{std::move(cost), static_cast<std::int32_t>(j.id)};
						found = true;
					}
				}
				if (!found)
					best.cost = solve(next_release(clock), code);

				memo_.emplace(key, best);
				return best.cost;
			}

			Time next_release(Time clock) const
			{
				Time next = -1;
				for (const auto& j : inst_.jobs())
					if (remaining_[j.id] > 0 && j.release > clock && (next < 0 || j.release < next))
						next = j.release;
				return next;
			}

			Trace reconstruct(std::uint64_t code)
			{
				Trace trace;
				trace.fingerprint = inst_.fingerprint();
				Time clock = 0;
				while (code != 0) {
					const Entry& e = memo_.at(static_cast<std::uint64_t>(clock) * radix_ + code);
					if (e.choice == kIdle) {
						const Time next = next_release(clock);
						for (; clock < next; ++clock)
							trace.decisions.push_back(PolicyDecision::idle());
						continue;
					}
					const auto id = static_cast<JobId>(e.choice);
					trace.decisions.push_back(PolicyDecision::run(id));
					--remaining_[id];
					code -= stride_[id];
					++clock;
				}
				return trace;
			}

			const Instance& inst_;
			std::vector<Time> remaining_;
			std::vector<std::uint64_t> stride_;
			std::uint64_t radix_ = 1;
			std::unordered_map<std::uint64_t, Entry> memo_;
		};

	} // namespace

	OracleResult optimal_cost(const Instance& instance, const OracleLimits& limits)
	{
		return Search(instance, limits).run();
	}

	BigInt sequence_cost(const Instance& instance, std::span<const JobId> order)
	{
		if (!instance.common_release())
			throw Error(ErrorKind::UnsupportedInstance, "sequence cost needs a common release");
		Time clock = instance.jobs().front().release;
		BigInt cost = 0;
		for (JobId id : order) {
			const JobSpec& j = instance.job(id);
			clock += j.work;
			cost += completion_penalty(j, clock, instance.base());
		}
		return cost;
	}

	PermutationResult best_permutation_cost(const Instance& instance)
	{
		if (!instance.common_release())
			throw Error(ErrorKind::UnsupportedInstance, "permutation brute force needs a common release");
		if (instance.size() > 8)
			throw Error(ErrorKind::UnsupportedInstance, "permutation brute force is limited to 8 jobs");

		std::vector<JobId> order(instance.size());
		std::iota(order.begin(), order.end(), JobId{0});
		PermutationResult best{order, sequence_cost(instance, order)};
		while (std::next_permutation(order.begin(), order.end())) {
			BigInt cost = sequence_cost(instance, order);
			if (cost < best.cost)
				best = PermutationResult{order, std::move(cost)};
		}
		return best;
	}

	std::vector<BigInt> max_potential_series(const Instance& instance, const Trace& trace)
	{
		if (instance.has_linear())
			throw Error(ErrorKind::UnsupportedInstance, "potential series is defined for exponential jobs only");

		std::vector<Time> remaining;
		for (const auto& j : instance.jobs())
			remaining.push_back(j.work);

		std::vector<BigInt> series;
		series.reserve(trace.size());
		for (std::size_t k = 0; k < trace.size(); ++k) {
			const Time slot = static_cast<Time>(k);
			BigInt top = 0;
			for (const auto& j : instance.jobs()) {
				if (j.release > slot || remaining[j.id] == 0)
					continue;
				top = std::max(top, potential(current_penalty(j, slot, instance.base()), remaining[j.id], instance.base()));
			}
			series.push_back(std::move(top));
			const auto& d = trace.decisions[k];
			if (d.is_idle())
				continue;
			if (*d.job >= instance.size() || remaining[*d.job] == 0)
				throw Error(ErrorKind::TraceInvariant, "slot " + std::to_string(k) + ": invalid job in trace");
			--remaining[*d.job];
		}
		return series;
	}

} // namespace expsched
