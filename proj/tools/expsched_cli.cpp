// expsched: generate instances, run policies, solve exactly, compare and sweep.
//
// Exit codes: 0 success, 1 usage error, 2 infeasible or oversized instance,
// 3 invariant violation (including a failed hard competitive bound).

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "expsched/error.hpp"
#include "expsched/experiments.hpp"

using namespace expsched;

namespace {

	constexpr int kUsage = 1;
	constexpr int kInfeasible = 2;
	constexpr int kInvariant = 3;

	int exit_code_for(ErrorKind kind)
	{
		switch (kind) {
		case ErrorKind::Parameter:
			return kUsage;
		case ErrorKind::Parse:
		case ErrorKind::InvalidInstance:
		case ErrorKind::BudgetExceeded:
		case ErrorKind::UnsupportedInstance:
		case ErrorKind::Configuration:
			return kInfeasible;
		default:
			return kInvariant;
		}
	}

	void write_text(const std::string& path, const std::string& text)
	{
		if (path.empty() || path == "-") {
			std::cout << text;
			return;
		}
		std::ofstream out(path, std::ios::binary);
		if (!out)
			throw Error(ErrorKind::Parameter, "cannot write " + path);
		out << text;
	}

	std::vector<PolicyKind> parse_policy_list(const std::vector<std::string>& names)
	{
		std::vector<PolicyKind> kinds;
		for (const auto& n : names)
			kinds.push_back(parse_policy_kind(n));
		if (kinds.empty())
			throw Error(ErrorKind::Parameter, "no policies given");
		return kinds;
	}

	struct GeneratorArgs {
		GeneratorSpec spec;
		std::string family = "random";
		std::string classes = "mixed";

		void attach(CLI::App* app)
		{
			app->add_option("--family", family, "naive-lb | identical-exp | case3 | random")->required();
			app->add_option("--M", spec.M, "linear weight M (naive-lb, case3)");
			app->add_option("--x", spec.x, "base x");
			app->add_option("--s", spec.s, "exponential start penalty");
			app->add_option("--T", spec.T, "exponential work (naive-lb)");
			app->add_option("--n", spec.n, "job count (identical-exp)");
			app->add_option("--t", spec.t, "work per job (identical-exp)");
			app->add_option("--k", spec.k, "linear job count (case3)");
			app->add_option("--alpha", spec.alpha, "extra exponential work (case3)");
			app->add_option("--seed", spec.seed, "random seed");
			app->add_option("--n-min", spec.n_min, "random: fewest jobs");
			app->add_option("--n-max", spec.n_max, "random: most jobs");
			app->add_option("--t-max", spec.t_max, "random: largest work");
			app->add_option("--r-max", spec.r_max, "random: latest release");
			app->add_option("--v-max", spec.v_max, "random: largest weight or start penalty");
			app->add_option("--classes", classes, "random: mixed | linear | exp");
			app->add_flag("--same-release", spec.same_release, "random: release every job at 0");
		}

		GeneratorSpec resolve() const
		{
			GeneratorSpec s = spec;
			s.family = parse_family(family);
			s.classes = parse_class_mix(classes);
			return s;
		}
	};

	struct PolicyArgs {
		std::string threshold_variant = "stated";
		std::string ordering = "potential";

		void attach(CLI::App* app)
		{
			app->add_option("--threshold-variant", threshold_variant, "stated (sqrt(M/s_min)) | derived (sqrt(M*s_min))");
			app->add_option("--ordering", ordering, "exponential queue order: potential | swap-key");
		}

		PolicyOptions resolve() const
		{
			PolicyOptions o;
			if (threshold_variant == "stated")
				o.threshold.variant = ThresholdVariant::StatedSqrtMOverSmin;
			else if (threshold_variant == "derived")
				o.threshold.variant = ThresholdVariant::DerivedSqrtMTimesSmin;
			else
				throw Error(ErrorKind::Parameter, "unknown threshold variant '" + threshold_variant + "'");
			if (ordering == "potential")
				o.ordering = ExpOrdering::MaxPotential;
			else if (ordering == "swap-key")
				o.ordering = ExpOrdering::SwapKey;
			else
				throw Error(ErrorKind::Parameter, "unknown ordering '" + ordering + "'");
			return o;
		}
	};

} // namespace

int main(int argc, char** argv)
{
	CLI::App app{"Preemptive single-machine scheduling with linear and exponential penalties"};
	app.require_subcommand(1);

	GeneratorArgs gen_args;
	std::string gen_out;
	auto* gen = app.add_subcommand("gen", "generate an instance file");
	gen_args.attach(gen);
	gen->add_option("-o,--output", gen_out, "output file (stdout if omitted)");

	std::string instance_path;
	std::string policy_name;
	std::string trace_out;
	PolicyArgs sim_policy;
	auto* simulate = app.add_subcommand("simulate", "run one policy on an instance");
	simulate->add_option("--instance", instance_path)->required();
	simulate->add_option("--policy", policy_name, "naive | threshold | expfirst | smith | maxweight")->required();
	simulate->add_option("--trace", trace_out, "write the schedule as CSV");
	sim_policy.attach(simulate);

	std::uint64_t budget = OracleLimits{}.state_budget;
	auto* oracle = app.add_subcommand("oracle", "exact optimum by exhaustive search");
	oracle->add_option("--instance", instance_path)->required();
	oracle->add_option("--budget", budget, "state budget");
	oracle->add_option("--trace", trace_out, "write the optimal schedule as CSV");

	std::vector<std::string> policy_names;
	std::string report_out;
	PolicyArgs cmp_policy;
	auto* cmp = app.add_subcommand("compare", "competitive ratios of policies against the optimum");
	cmp->add_option("--instance", instance_path)->required();
	cmp->add_option("--policies", policy_names)->delimiter(',')->required();
	cmp->add_option("--budget", budget, "oracle state budget");
	cmp->add_option("--report", report_out, "write the CSV report here (stdout if omitted)");
	cmp_policy.attach(cmp);

	GeneratorArgs sweep_args;
	std::vector<std::string> grid;
	bool serial = false;
	PolicyArgs sweep_policy;
	auto* sw = app.add_subcommand("sweep", "compare policies over a parameter grid");
	sweep_args.attach(sw);
	sw->add_option("--grid", grid, "axis as name=a,b,c or name=lo..hi; repeat for a product")->required();
	sw->add_option("--policies", policy_names)->delimiter(',')->required();
	sw->add_option("--budget", budget, "oracle state budget");
	sw->add_option("--report", report_out, "write the CSV report here (stdout if omitted)");
	sw->add_flag("--serial", serial, "evaluate grid points on one thread");
	sweep_policy.attach(sw);

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError& e) {
		const int code = app.exit(e);
		return code == 0 ? 0 : kUsage;
	}

	try {
		if (*gen) {
			write_text(gen_out, serialize_instance(generate(gen_args.resolve())));
			return 0;
		}

		if (*simulate) {
			const Instance inst = load_instance(instance_path);
			const Policy policy = make_policy(parse_policy_kind(policy_name), sim_policy.resolve());
			const RunResult run = run_policy(inst, policy);
			std::ostringstream out;
			out << "policy " << policy.name << "\n";
			for (const auto& j : inst.jobs())
				out << "job " << j.id << " completion " << run.report.completions[j.id] << " penalty "
				    << run.report.per_job[j.id] << "\n";
			out << "total " << run.report.total << "\n";
			std::cout << out.str();
			if (!trace_out.empty())
				write_text(trace_out, trace_to_csv(run.trace));
			return 0;
		}

		if (*oracle) {
			const Instance inst = load_instance(instance_path);
			const OracleResult opt = optimal_cost(inst, OracleLimits{budget});
			std::cout << "optimal " << opt.total << "\nstates " << opt.states_explored << "\n";
			if (!trace_out.empty())
				write_text(trace_out, trace_to_csv(opt.trace));
			return 0;
		}

		if (*cmp) {
			const Instance inst = load_instance(instance_path);
			const ComparisonReport r = compare(inst, parse_policy_list(policy_names), OracleLimits{budget},
			                                   cmp_policy.resolve(), instance_path);
			write_text(report_out, report_csv({r}));
			if (r.oracle_error)
				std::cerr << "oracle unavailable: " << *r.oracle_error << "\n";
			return r.hard_bounds_hold() ? 0 : kInvariant;
		}

		if (*sw) {
			SweepConfig cfg;
			cfg.base = sweep_args.resolve();
			for (const auto& axis : grid)
				cfg.grid.push_back(parse_grid_axis(axis));
			cfg.policies = parse_policy_list(policy_names);
			cfg.limits = OracleLimits{budget};
			cfg.options = sweep_policy.resolve();
			const SweepReport rep = serial ? sweep_serial(cfg) : sweep(cfg);
			write_text(report_out, report_csv(rep.items));
			(report_out.empty() ? std::cerr : std::cout) << summary_text(rep);
			return rep.hard_bounds_hold() ? 0 : kInvariant;
		}
	} catch (const Error& e) {
		std::cerr << "error: " << e.what() << "\n";
		return exit_code_for(e.kind());
	} catch (const std::exception& e) {
		std::cerr << "error: " << e.what() << "\n";
		return kInvariant;
	}
	return kUsage;
}
