#include <doctest.h>

#include "expsched/error.hpp"
#include "expsched/instances.hpp"
#include "expsched/policies.hpp"

using namespace expsched;

namespace {

	ErrorKind kind_of(const std::function<void()>& f)
	{
		try {
			f();
		} catch (const Error& e) {
			return e.kind();
		}
		FAIL("expected an expsched::Error");
		return ErrorKind::InvalidInstance;
	}

} // namespace

TEST_CASE("naive lower-bound family")
{
	const Instance a = gen_naive_lb(16, 2, 1, 12);
	CHECK(a == Instance(2, {JobSpec::linear(0, 0, 4, 16), JobSpec::exponential(1, 0, 12, 1)}));
	const Instance b = gen_naive_lb(2, 2, 1, 2);
	CHECK(b == Instance(2, {JobSpec::linear(0, 0, 1, 2), JobSpec::exponential(1, 0, 2, 1)}));
	const Instance c = gen_naive_lb(54, 3, 2, 5);
	CHECK(c.job(0).work == 3);

	CHECK(kind_of([] { gen_naive_lb(12, 2, 1, 12); }) == ErrorKind::Parameter);
	CHECK(kind_of([] { gen_naive_lb(16, 2, 1, 4); }) == ErrorKind::Parameter);
	CHECK(kind_of([] { gen_naive_lb(1, 2, 1, 4); }) == ErrorKind::Parameter);
	CHECK(kind_of([] { gen_naive_lb(16, 2, 3, 9); }) == ErrorKind::Parameter);
}

TEST_CASE("identical exponential family")
{
	const Instance a = gen_identical_exp(2, 1, 2, 2);
	CHECK(a.size() == 2);
	CHECK(a.job(0).work == a.job(1).work);
	CHECK(a.job(1).is_exponential());
	CHECK(gen_identical_exp(1, 4, 3, 5).size() == 1);
	CHECK(kind_of([] { gen_identical_exp(0, 1, 1, 2); }) == ErrorKind::Parameter);

	const auto run = run_policy(gen_identical_exp(3, 1, 3, 2), make_policy(PolicyKind::ExpFirst));
	CHECK(run.report.completions == std::vector<Time>{7, 8, 9});
}

TEST_CASE("case 3 family")
{
	const Instance a = gen_case3(2, 8, 1, 2, 1);
	CHECK(a == Instance(2, {JobSpec::exponential(0, 0, 5, 1), JobSpec::linear(1, 0, 1, 8), JobSpec::linear(2, 0, 1, 8)}));
	const Instance b = gen_case3(1, 2, 1, 2, 0);
	CHECK(b == Instance(2, {JobSpec::exponential(0, 0, 1, 1), JobSpec::linear(1, 0, 1, 2)}));
	CHECK(kind_of([] { gen_case3(3, 8, 1, 2, 0); }) == ErrorKind::Parameter);
	CHECK(kind_of([] { gen_case3(1, 1, 1, 2, 0); }) == ErrorKind::Parameter);
	CHECK(kind_of([] { gen_case3(1, 2, 1, 2, -1); }) == ErrorKind::Parameter);
}

TEST_CASE("seeded random generator is pinned")
{
	GeneratorSpec spec;
	spec.seed = 1;
	spec.n_max = 3;
	spec.t_max = 3;
	spec.r_max = 2;
	spec.v_max = 8;
	spec.x = 2;
	const Instance expected(2, {JobSpec::linear(0, 0, 1, 1), JobSpec::exponential(1, 2, 1, 1),
	                            JobSpec::linear(2, 2, 3, 6)});
	CHECK(gen_random(spec) == expected);
	CHECK(gen_random(spec) == gen_random(spec));

	spec.classes = ClassMix::ExpOnly;
	CHECK(gen_random(spec) == Instance(2, {JobSpec::exponential(0, 0, 1, 7), JobSpec::exponential(1, 0, 1, 5),
	                                       JobSpec::exponential(2, 0, 3, 1)}));

	spec.n_max = 0;
	CHECK(kind_of([&] { gen_random(spec); }) == ErrorKind::Parameter);
}

TEST_CASE("random generator respects its bounds")
{
	GeneratorSpec spec;
	spec.n_max = 6;
	spec.t_max = 4;
	spec.r_max = 5;
	spec.v_max = 9;
	for (auto mix : {ClassMix::Mixed, ClassMix::LinearOnly, ClassMix::ExpOnly})
		for (std::uint64_t seed = 0; seed < 300; ++seed) {
			spec.seed = seed;
			spec.classes = mix;
			spec.same_release = seed % 2 == 0;
			const Instance inst = gen_random(spec);
			CHECK(inst.size() >= 1);
			CHECK(inst.size() <= 6);
			for (const auto& j : inst.jobs()) {
				CHECK(j.work <= 4);
				CHECK(j.release <= 5);
				CHECK(j.value <= 9);
				if (spec.same_release)
					CHECK(j.release == 0);
				if (mix == ClassMix::LinearOnly)
					CHECK(j.is_linear());
				if (mix == ClassMix::ExpOnly)
					CHECK(j.is_exponential());
			}
			if (mix == ClassMix::Mixed && inst.size() >= 2) {
				CHECK(inst.has_linear());
				CHECK(inst.has_exponential());
			}
		}
}

TEST_CASE("generate dispatches by family and grid names")
{
	GeneratorSpec spec;
	spec.family = parse_family("naive-lb");
	spec.set("M", 16);
	spec.set("T", 12);
	CHECK(generate(spec) == gen_naive_lb(16, 2, 1, 12));
	spec.family = Family::Case3;
	spec.set("k", 2);
	spec.set("M", 8);
	spec.set("alpha", 1);
	CHECK(generate(spec) == gen_case3(2, 8, 1, 2, 1));
	CHECK(kind_of([&] { spec.set("bogus", 1); }) == ErrorKind::Parameter);
	CHECK(kind_of([] { parse_family("adversary"); }) == ErrorKind::Parameter);
	CHECK(parse_class_mix("exp") == ClassMix::ExpOnly);
}

TEST_CASE("instance file round trip")
{
	const Instance lb = gen_naive_lb(16, 2, 1, 12);
	const std::string text = serialize_instance(lb);
	CHECK(text ==
	      "{\"x\": 2, \"jobs\": [\n"
	      "  {\"id\": 0, \"class\": \"linear\", \"r\": 0, \"t\": 4, \"w\": 16},\n"
	      "  {\"id\": 1, \"class\": \"exp\", \"r\": 0, \"t\": 12, \"s\": 1}\n"
	      "]}\n");
	CHECK(parse_instance(text) == lb);

	GeneratorSpec spec;
	spec.n_max = 6;
	for (std::uint64_t seed = 0; seed < 50; ++seed) {
		spec.seed = seed;
		const Instance inst = gen_random(spec);
		CHECK(parse_instance(serialize_instance(inst)) == inst);
	}
}

TEST_CASE("instance files carry arbitrary-precision integers")
{
	const std::string huge = "123456789012345678901234567890123456789";
	const Instance inst = parse_instance(R"({"x": 3, "jobs": [{"id": 0, "class": "exp", "r": 0, "t": 2, "s": )" + huge +
	                                     R"(}, {"class": "linear", "id": 1, "r": 1, "t": 1, "w": 18446744073709551615}]})");
	CHECK(inst.job(0).start_penalty() == BigInt(huge));
	CHECK(inst.job(1).weight() == BigInt("18446744073709551615"));
	CHECK(parse_instance(serialize_instance(inst)) == inst);
}

TEST_CASE("instance file errors")
{
	auto parse = [](const std::string& s) { return [s] { parse_instance(s); }; };
	CHECK(kind_of(parse(R"({"x": 1, "jobs": [{"id": 0, "class": "linear", "r": 0, "t": 1, "w": 1}]})")) ==
	      ErrorKind::InvalidInstance);
	CHECK(kind_of(parse(R"({"x": 2, "jobs": [{"id": 0, "class": "linear", "r": 0, "t": 1, "s": 1}]})")) ==
	      ErrorKind::Parse);
	CHECK(kind_of(parse(R"({"x": 2, "jobs": [{"id": 0, "class": "exp", "r": 0, "t": 1, "w": 1}]})")) ==
	      ErrorKind::Parse);
	CHECK(kind_of(parse(R"({"x": 2, "jobs": [{"id": 0, "class": "exp", "r": 0, "t": 1, "s": 1, "d": 3}]})")) ==
	      ErrorKind::Parse);
	CHECK(kind_of(parse(R"({"x": 2, "jobs": [], "name": "z"})")) == ErrorKind::Parse);
	CHECK(kind_of(parse(R"({"x": 2, "jobs": [{"id": 0, "class": "exp", "r": 0, "t": 1.5, "s": 1}]})")) ==
	      ErrorKind::Parse);
	CHECK(kind_of(parse(R"({"x": 2, "jobs": [{"id": 0, "class": "exp", "r": 0, "t": "1", "s": 1}]})")) ==
	      ErrorKind::Parse);
	CHECK(kind_of(parse(R"({"x": 2, "jobs": [{"id": 0, "class": "poly", "r": 0, "t": 1, "s": 1}]})")) ==
	      ErrorKind::Parse);
	CHECK(kind_of(parse(R"({"x": 2, "jobs": [{"id": 0, "class": "exp", "r": 0, "s": 1}]})")) == ErrorKind::Parse);
	CHECK(kind_of(parse(R"({"x": 2, "jobs": [{"id": 0, "class": "exp", "r": 0, "t": 1, "s": 1},
	                                         {"id": 0, "class": "exp", "r": 0, "t": 1, "s": 1}]})")) ==
	      ErrorKind::InvalidInstance);
	CHECK(kind_of(parse(R"({"x": 2, "jobs": [{"id": 0, "class": "exp", "r": 0, "t": 0, "s": 1}]})")) ==
	      ErrorKind::InvalidInstance);
	CHECK(kind_of(parse(R"({"x": 2, "jobs": [)")) == ErrorKind::Parse);
	CHECK(kind_of(parse(R"([1, 2])")) == ErrorKind::Parse);
}
