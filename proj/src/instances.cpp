#include "expsched/instances.hpp"

#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "expsched/error.hpp"

namespace expsched {

	namespace {

		Base checked_base(std::int64_t x)
		{
			if (x < 2 || x > std::numeric_limits<Base>::max())
				throw Error(ErrorKind::Parameter, "base x must be >= 2, got " + std::to_string(x));
			return static_cast<Base>(x);
		}

		std::int64_t integral_log(Base x, const BigInt& num, const BigInt& den, const char* what)
		{
			if (den <= 0 || num <= 0 || num % den != 0)
				throw Error(ErrorKind::Parameter, std::string(what) + " is not an integral power of x");
			const auto k = exact_log(x, num / den);
			if (!k)
				throw Error(ErrorKind::Parameter, std::string(what) + " = " + BigInt(num / den).str() +
				                                  " is not an integral power of " + std::to_string(x));
			return *k;
		}

	} // namespace

	Instance gen_naive_lb(const BigInt& M, Base x, const BigInt& s, Time T)
	{
		if (s < 1 || M < 1)
			throw Error(ErrorKind::Parameter, "M and s must be positive");
		const std::int64_t k = integral_log(x, M, s, "M/s");
		if (k < 1)
			throw Error(ErrorKind::Parameter, "M must exceed s");
		if (T <= k)
			throw Error(ErrorKind::Parameter, "T must exceed log_x(M/s) = " + std::to_string(k));
		return Instance(x, {JobSpec::linear(0, 0, k, M), JobSpec::exponential(1, 0, T, s)});
	}

	Instance gen_identical_exp(std::size_t n, const BigInt& s, Time t, Base x)
	{
		if (n < 1 || t < 1 || s < 1)
			throw Error(ErrorKind::Parameter, "identical-exp needs n >= 1, t >= 1, s >= 1");
		std::vector<JobSpec> jobs;
		for (std::size_t i = 0; i < n; ++i)
			jobs.push_back(JobSpec::exponential(static_cast<JobId>(i), 0, t, s));
		return Instance(x, std::move(jobs));
	}

	Instance gen_case3(std::size_t k, const BigInt& M, const BigInt& s, Base x, Time alpha)
	{
		if (k < 1 || alpha < 0 || M < 1 || s < 1)
			throw Error(ErrorKind::Parameter, "case3 needs k >= 1, alpha >= 0, M >= 1, s >= 1");
		const Time t = integral_log(x, M * k, s, "Mk/s") + alpha;
		if (t < 1)
			throw Error(ErrorKind::Parameter, "case3 exponential job would have no work");
		std::vector<JobSpec> jobs{JobSpec::exponential(0, 0, t, s)};
		for (std::size_t i = 0; i < k; ++i)
			jobs.push_back(JobSpec::linear(static_cast<JobId>(i + 1), 0, 1, M));
		return Instance(x, std::move(jobs));
	}

	const char* to_string(Family family)
	{
		switch (family) {
		case Family::NaiveLB: return "naive-lb";
		case Family::IdenticalExp: return "identical-exp";
		case Family::Case3: return "case3";
		case Family::Random: return "random";
		}
		return "?";
	}

	Family parse_family(std::string_view name)
	{
		for (auto f : {Family::NaiveLB, Family::IdenticalExp, Family::Case3, Family::Random})
			if (name == to_string(f))
				return f;
		throw Error(ErrorKind::Parameter, "unknown family '" + std::string(name) + "'");
	}

	const char* to_string(ClassMix mix)
	{
		switch (mix) {
		case ClassMix::Mixed: return "mixed";
		case ClassMix::LinearOnly: return "linear";
		case ClassMix::ExpOnly: return "exp";
		}
		return "?";
	}

	ClassMix parse_class_mix(std::string_view name)
	{
		for (auto m : {ClassMix::Mixed, ClassMix::LinearOnly, ClassMix::ExpOnly})
			if (name == to_string(m))
				return m;
		throw Error(ErrorKind::Parameter, "unknown class mix '" + std::string(name) + "'");
	}

	void GeneratorSpec::set(std::string_view name, std::int64_t value)
	{
		if (name == "M") M = value;
		else if (name == "x") x = value;
		else if (name == "s") s = value;
		else if (name == "T") T = value;
		else if (name == "n") n = value;
		else if (name == "t") t = value;
		else if (name == "k") k = value;
		else if (name == "alpha") alpha = value;
		else if (name == "seed") seed = static_cast<std::uint64_t>(value);
		else if (name == "n_min") n_min = value;
		else if (name == "n_max") n_max = value;
		else if (name == "t_max") t_max = value;
		else if (name == "r_max") r_max = value;
		else if (name == "v_max") v_max = value;
		else throw Error(ErrorKind::Parameter, "unknown generator parameter '" + std::string(name) + "'");
	}

	Instance gen_random(const GeneratorSpec& spec)
	{
		if (spec.n_min < 1 || spec.n_max < spec.n_min)
			throw Error(ErrorKind::Parameter, "random bounds need 1 <= n_min <= n_max");
		if (spec.n_max < 1 || spec.t_max < 1 || spec.r_max < 0 || spec.v_max < 1)
			throw Error(ErrorKind::Parameter, "random bounds need n_max >= 1, t_max >= 1, r_max >= 0, v_max >= 1");
		const Base x = checked_base(spec.x);

		std::mt19937_64 engine(spec.seed);
		auto draw = [&engine](std::int64_t lo, std::int64_t hi) {
			const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
			return lo + static_cast<std::int64_t>(engine() % span);
		};

		const auto n = static_cast<std::size_t>(draw(spec.n_min, spec.n_max));
		std::vector<JobSpec> jobs;
		for (std::size_t i = 0; i < n; ++i) {
			JobClass cls = spec.classes == ClassMix::ExpOnly ? JobClass::Exponential : JobClass::Linear;
			if (spec.classes == ClassMix::Mixed)
				cls = (engine() & 1u) ? JobClass::Exponential : JobClass::Linear;
			const Time r = spec.same_release ? 0 : draw(0, spec.r_max);
			const Time t = draw(1, spec.t_max);
			const BigInt v = draw(1, spec.v_max);
			jobs.push_back(JobSpec{static_cast<JobId>(i), cls, r, t, v});
		}
		if (spec.classes == ClassMix::Mixed && n >= 2) {
			const bool one_class = std::all_of(jobs.begin(), jobs.end(),
			                                   [&](const JobSpec& j) { return j.cls == jobs.front().cls; });
			if (one_class)
				jobs.back().cls = jobs.back().is_linear() ? JobClass::Exponential : JobClass::Linear;
		}
		return Instance(x, std::move(jobs));
	}

	Instance generate(const GeneratorSpec& spec)
	{
		if (spec.M < 1 || spec.s < 1 || spec.n < 1 || spec.k < 1)
			throw Error(ErrorKind::Parameter, "M, s, n and k must be positive");
		switch (spec.family) {
		case Family::NaiveLB:
			return gen_naive_lb(spec.M, checked_base(spec.x), spec.s, spec.T);
		case Family::IdenticalExp:
			return gen_identical_exp(static_cast<std::size_t>(spec.n), spec.s, spec.t, checked_base(spec.x));
		case Family::Case3:
			return gen_case3(static_cast<std::size_t>(spec.k), spec.M, spec.s, checked_base(spec.x), spec.alpha);
		case Family::Random:
			return gen_random(spec);
		}
		throw Error(ErrorKind::Parameter, "unknown family");
	}

	namespace {

		using json = nlohmann::json;

		// The stock DOM builder turns integers wider than 64 bits into doubles.
		// Keep their source text instead, parked in a binary node since JSON
		// text can never produce one.
		class ExactNumberSax : public nlohmann::detail::json_sax_dom_parser<json> {
		public:
			using json_sax_dom_parser::json_sax_dom_parser;

			bool number_float(number_float_t, const string_t& text)
			{
				binary_t raw(std::vector<std::uint8_t>(text.begin(), text.end()));
				return binary(raw);
			}
		};

		BigInt read_integer(const json& v, const std::string& where)
		{
			if (v.is_number_unsigned())
				return BigInt(v.get<std::uint64_t>());
			if (v.is_number_integer())
				return BigInt(v.get<std::int64_t>());
			if (v.is_binary()) {
				const auto& bytes = v.get_binary();
				try {
					return parse_bigint(std::string(bytes.begin(), bytes.end()));
				} catch (const Error&) {
					throw Error(ErrorKind::Parse, where + " must be an integer, got " +
					                              std::string(bytes.begin(), bytes.end()));
				}
			}
			throw Error(ErrorKind::Parse, where + " must be an integer");
		}

		std::int64_t read_small(const json& v, const std::string& where)
		{
			const BigInt b = read_integer(v, where);
			if (b < std::numeric_limits<std::int64_t>::min() || b > std::numeric_limits<std::int64_t>::max())
				throw Error(ErrorKind::Parse, where + " out of range");
			return static_cast<std::int64_t>(b);
		}

	} // namespace

	Instance parse_instance(std::string_view text)
	{
		json root;
		ExactNumberSax sax(root, true);
		try {
			json::sax_parse(text, &sax);
		} catch (const json::exception& e) {
			throw Error(ErrorKind::Parse, e.what());
		}
		if (!root.is_object())
			throw Error(ErrorKind::Parse, "instance must be a JSON object");
		for (const auto& [key, _] : root.items())
			if (key != "x" && key != "jobs")
				throw Error(ErrorKind::Parse, "unknown key '" + key + "'");
		if (!root.contains("x") || !root.contains("jobs"))
			throw Error(ErrorKind::Parse, "instance needs 'x' and 'jobs'");

		const std::int64_t x = read_small(root["x"], "x");
		if (x < 2)
			throw Error(ErrorKind::InvalidInstance, "base x must be >= 2, got " + std::to_string(x));
		if (x > std::numeric_limits<Base>::max())
			throw Error(ErrorKind::InvalidInstance, "base x too large");

		const json& jobs = root["jobs"];
		if (!jobs.is_array())
			throw Error(ErrorKind::Parse, "'jobs' must be an array");

		std::vector<JobSpec> specs;
		for (std::size_t i = 0; i < jobs.size(); ++i) {
			const json& j = jobs[i];
			const std::string at = "jobs[" + std::to_string(i) + "]";
			if (!j.is_object())
				throw Error(ErrorKind::Parse, at + " must be an object");
			for (const auto& [key, _] : j.items())
				if (key != "id" && key != "class" && key != "r" && key != "t" && key != "w" && key != "s")
					throw Error(ErrorKind::Parse, at + ": unknown key '" + key + "'");
			for (const char* required : {"id", "class", "r", "t"})
				if (!j.contains(required))
					throw Error(ErrorKind::Parse, at + ": missing '" + required + "'");
			if (!j["class"].is_string())
				throw Error(ErrorKind::Parse, at + ".class must be a string");

			const std::string cls = j["class"].get<std::string>();
			JobSpec spec;
			if (cls == "linear") {
				spec.cls = JobClass::Linear;
				if (j.contains("s"))
					throw Error(ErrorKind::Parse, at + ": linear job carries 's'");
				if (!j.contains("w"))
					throw Error(ErrorKind::Parse, at + ": linear job needs 'w'");
				spec.value = read_integer(j["w"], at + ".w");
			} else if (cls == "exp") {
				spec.cls = JobClass::Exponential;
				if (j.contains("w"))
					throw Error(ErrorKind::Parse, at + ": exponential job carries 'w'");
				if (!j.contains("s"))
					throw Error(ErrorKind::Parse, at + ": exponential job needs 's'");
				spec.value = read_integer(j["s"], at + ".s");
			} else {
				throw Error(ErrorKind::Parse, at + ".class must be \"linear\" or \"exp\"");
			}
			const std::int64_t id = read_small(j["id"], at + ".id");
			if (id < 0 || id > std::numeric_limits<JobId>::max())
				throw Error(ErrorKind::InvalidInstance, at + ".id out of range");
			spec.id = static_cast<JobId>(id);
			spec.release = read_small(j["r"], at + ".r");
			spec.work = read_small(j["t"], at + ".t");
			specs.push_back(std::move(spec));
		}
		return Instance(static_cast<Base>(x), std::move(specs));
	}

	std::string serialize_instance(const Instance& instance)
	{
		std::ostringstream out;
		out << "{\"x\": " << instance.base() << ", \"jobs\": [";
		bool first = true;
		for (const auto& j : instance.jobs()) {
			out << (first ? "\n  " : ",\n  ");
			first = false;
			out << "{\"id\": " << j.id << ", \"class\": \"" << to_string(j.cls) << "\", \"r\": " << j.release
			    << ", \"t\": " << j.work << ", \"" << (j.is_linear() ? "w" : "s") << "\": " << j.value.str() << "}";
		}
		out << "\n]}\n";
		return out.str();
	}

	Instance load_instance(const std::string& path)
	{
		std::ifstream in(path);
		if (!in)
			throw Error(ErrorKind::Parse, "cannot open instance file " + path);
		std::stringstream buf;
		buf << in.rdbuf();
		return parse_instance(buf.str());
	}

	void save_instance(const Instance& instance, const std::string& path)
	{
		std::ofstream out(path);
		if (!out)
			throw Error(ErrorKind::Parameter, "cannot write " + path);
		out << serialize_instance(instance);
	}

} // namespace expsched
