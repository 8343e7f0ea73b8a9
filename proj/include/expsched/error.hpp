#ifndef EXPSCHED_ERROR_HPP
#define EXPSCHED_ERROR_HPP

#include <stdexcept>
#include <string>

namespace expsched {

	enum class ErrorKind {
		ReleaseViolation,      // penalty queried before the job exists
		InfeasibleCompletion,  // completion earlier than r + t
		CompletedJob,          // potential/key of a job with no work left
		InfeasibleDecision,    // policy chose an unreleased or finished job
		WorkConservation,      // idle slot while released work is pending
		TraceInvariant,        // trace fails validation against its instance
		Configuration,         // policy missing constants it needs
		UnsupportedInstance,   // operation restricted to an instance class
		BudgetExceeded,        // oracle state space over the configured limit
		Parameter,             // generator or grid parameter out of range
		Parse,                 // malformed instance or trace text
		InvalidInstance,       // instance violates its invariants
	};

	const char* to_string(ErrorKind kind);

	class Error : public std::runtime_error {
	public:
		Error(ErrorKind kind, const std::string& what)
		: std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind)
		{
		}

		ErrorKind kind() const noexcept { return kind_; }

	private:
		ErrorKind kind_;
	};

} // namespace expsched

#endif
