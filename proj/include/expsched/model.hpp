#ifndef EXPSCHED_MODEL_HPP
#define EXPSCHED_MODEL_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "exact.hpp"

namespace expsched {

	using JobId = std::uint32_t;

	enum class JobClass { Linear, Exponential };

	const char* to_string(JobClass cls);

	/// One job. `value` is the weight w of a linear job or the start penalty s
	/// of an exponential job; the class decides which.
	struct JobSpec {
		JobId id = 0;
		JobClass cls = JobClass::Linear;
		Time release = 0;
		Time work = 1;
		BigInt value = 1;

		static JobSpec linear(JobId id, Time release, Time work, BigInt weight);
		static JobSpec exponential(JobId id, Time release, Time work, BigInt start_penalty);

		bool is_linear() const { return cls == JobClass::Linear; }
		bool is_exponential() const { return cls == JobClass::Exponential; }

		const BigInt& weight() const;
		const BigInt& start_penalty() const;

		bool operator==(const JobSpec&) const = default;
	};

	/// A base x >= 2 plus jobs with ids 0..n-1. Jobs are stored by id.
	class Instance {
	public:
		/// Validates and sorts by id; throws Error(InvalidInstance).
		Instance(Base x, std::vector<JobSpec> jobs);

		Base base() const { return x_; }
		std::span<const JobSpec> jobs() const { return jobs_; }
		const JobSpec& job(JobId id) const { return jobs_.at(id); }
		std::size_t size() const { return jobs_.size(); }

		/// M: largest linear weight, 0 without linear jobs.
		BigInt max_weight() const;
		/// s_min: smallest exponential start penalty, absent without exponential jobs.
		std::optional<BigInt> min_start_penalty() const;

		bool has_linear() const;
		bool has_exponential() const;
		bool common_release() const;
		Time max_release() const;
		Time total_work() const;
		/// max r + sum t; no work-conserving schedule runs past it.
		Time horizon() const { return max_release() + total_work(); }

		/// FNV-1a over the canonical field text; identifies traces with instances.
		std::uint64_t fingerprint() const;

		bool operator==(const Instance&) const = default;

	private:
		Base x_;
		std::vector<JobSpec> jobs_;
	};

	/// s * x^(now - r) for exponential jobs, w for linear ones.
	BigInt current_penalty(const JobSpec& job, Time now, Base x);

	/// w * (C - r) or s * x^(C - r).
	BigInt completion_penalty(const JobSpec& job, Time completion, Base x);

	/// Penalty the job would reach if processed exclusively from now on.
	BigInt potential(const BigInt& current, Time remaining, Base x);

	/// s' x^rem / (x^rem - 1). Sorting by decreasing key is the optimal
	/// non-preemptive order for exponential jobs released together.
	Ratio exp_order_key(const BigInt& current, Time remaining, Base x);

	/// rem / w. Increasing key is Smith's order.
	Ratio smith_key(const BigInt& weight, Time remaining);

} // namespace expsched

#endif
