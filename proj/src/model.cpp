#include "expsched/model.hpp"

#include <algorithm>
#include <string>

#include "expsched/error.hpp"

namespace expsched {

	const char* to_string(JobClass cls)
	{
		return cls == JobClass::Linear ? "linear" : "exp";
	}

	JobSpec JobSpec::linear(JobId id, Time release, Time work, BigInt weight)
	{
		return JobSpec{id, JobClass::Linear, release, work, std::move(weight)};
	}

	JobSpec JobSpec::exponential(JobId id, Time release, Time work, BigInt start_penalty)
	{
		return JobSpec{id, JobClass::Exponential, release, work, std::move(start_penalty)};
	}

	const BigInt& JobSpec::weight() const
	{
		if (!is_linear())
			throw Error(ErrorKind::UnsupportedInstance, "job " + std::to_string(id) + " has no weight");
		return value;
	}

	const BigInt& JobSpec::start_penalty() const
	{
		if (!is_exponential())
			throw Error(ErrorKind::UnsupportedInstance, "job " + std::to_string(id) + " has no start penalty");
		return value;
	}

	Instance::Instance(Base x, std::vector<JobSpec> jobs)
	: x_(x), jobs_(std::move(jobs))
	{
		if (x_ < 2)
			throw Error(ErrorKind::InvalidInstance, "base x must be >= 2, got " + std::to_string(x_));
		if (jobs_.empty())
			throw Error(ErrorKind::InvalidInstance, "instance has no jobs");

		std::sort(jobs_.begin(), jobs_.end(),
		          [](const JobSpec& a, const JobSpec& b) { return a.id < b.id; });
		for (std::size_t i = 0; i < jobs_.size(); ++i) {
			const JobSpec& j = jobs_[i];
			if (i > 0 && jobs_[i - 1].id == j.id)
				throw Error(ErrorKind::InvalidInstance, "duplicate job id " + std::to_string(j.id));
			if (j.id != i)
				throw Error(ErrorKind::InvalidInstance, "job ids must be dense from 0; missing id " + std::to_string(i));
			if (j.release < 0)
				throw Error(ErrorKind::InvalidInstance, "job " + std::to_string(j.id) + ": negative release");
			if (j.work < 1)
				throw Error(ErrorKind::InvalidInstance, "job " + std::to_string(j.id) + ": work must be >= 1");
			if (j.value < 1)
				throw Error(ErrorKind::InvalidInstance,
				            "job " + std::to_string(j.id) + (j.is_linear() ? ": weight" : ": start penalty") + " must be >= 1");
		}
	}

	BigInt Instance::max_weight() const
	{
		BigInt m = 0;
		for (const auto& j : jobs_)
			if (j.is_linear() && j.value > m)
				m = j.value;
		return m;
	}

	std::optional<BigInt> Instance::min_start_penalty() const
	{
		std::optional<BigInt> m;
		for (const auto& j : jobs_)
			if (j.is_exponential() && (!m || j.value < *m))
				m = j.value;
		return m;
	}

	bool Instance::has_linear() const
	{
		return std::any_of(jobs_.begin(), jobs_.end(), [](const JobSpec& j) { return j.is_linear(); });
	}

	bool Instance::has_exponential() const
	{
		return std::any_of(jobs_.begin(), jobs_.end(), [](const JobSpec& j) { return j.is_exponential(); });
	}

	bool Instance::common_release() const
	{
		return std::all_of(jobs_.begin(), jobs_.end(),
		                   [&](const JobSpec& j) { return j.release == jobs_.front().release; });
	}

	Time Instance::max_release() const
	{
		Time r = 0;
		for (const auto& j : jobs_)
			r = std::max(r, j.release);
		return r;
	}

	Time Instance::total_work() const
	{
		Time t = 0;
		for (const auto& j : jobs_)
			t += j.work;
		return t;
	}

	std::uint64_t Instance::fingerprint() const
	{
		std::uint64_t h = 14695981039346656037ull;
		auto mix = [&h](const std::string& s) {
			for (unsigned char c : s) {
				h ^= c;
				h *= 1099511628211ull;
			}
			h ^= 0xff;
			h *= 1099511628211ull;
		};
		mix(std::to_string(x_));
		for (const auto& j : jobs_) {
			mix(std::to_string(j.id));
			mix(to_string(j.cls));
			mix(std::to_string(j.release));
			mix(std::to_string(j.work));
			mix(j.value.str());
		}
		return h;
	}

	BigInt current_penalty(const JobSpec& job, Time now, Base x)
	{
		if (now < job.release)
			throw Error(ErrorKind::ReleaseViolation,
			            "job " + std::to_string(job.id) + " queried at " + std::to_string(now) +
			            " before its release " + std::to_string(job.release));
		if (job.is_linear())
			return job.value;
		return job.value * power(x, now - job.release);
	}

	BigInt completion_penalty(const JobSpec& job, Time completion, Base x)
	{
		if (completion < job.release + job.work)
			throw Error(ErrorKind::InfeasibleCompletion,
			            "job " + std::to_string(job.id) + " cannot complete at " + std::to_string(completion));
		const Time flow = completion - job.release;
		if (job.is_linear())
			return job.value * flow;
		return job.value * power(x, flow);
	}

	BigInt potential(const BigInt& current, Time remaining, Base x)
	{
		if (remaining < 1)
			throw Error(ErrorKind::CompletedJob, "potential of a job with no remaining work");
		return current * power(x, remaining);
	}

	Ratio exp_order_key(const BigInt& current, Time remaining, Base x)
	{
		if (remaining < 1)
			throw Error(ErrorKind::CompletedJob, "order key of a job with no remaining work");
		const BigInt p = power(x, remaining);
		return Ratio(current * p, p - 1);
	}

	Ratio smith_key(const BigInt& weight, Time remaining)
	{
		if (remaining < 1)
			throw Error(ErrorKind::CompletedJob, "smith key of a job with no remaining work");
		if (weight < 1)
			throw Error(ErrorKind::Parameter, "smith key needs a positive weight");
		return Ratio(BigInt(remaining), weight);
	}

} // namespace expsched
