#include <doctest.h>

#include <random>

#include "expsched/error.hpp"
#include "expsched/model.hpp"
#include "test_support.hpp"

using namespace expsched;
using expsched::testing::ref_pow;

namespace {

	ErrorKind kind_of(const std::function<void()>& f)
	{
		try {
			f();
		} catch (const Error& e) {
			return e.kind();
		}
		FAIL("expected an expsched::Error");
		return ErrorKind::Parse;
	}

} // namespace

TEST_CASE("current penalty")
{
	CHECK(current_penalty(JobSpec::exponential(0, 1, 1, 3), 4, 2) == 24);
	CHECK(current_penalty(JobSpec::exponential(0, 7, 1, 5), 7, 2) == 5);
	const auto lin = JobSpec::linear(0, 3, 2, 10);
	for (Time now : {3, 4, 50})
		CHECK(current_penalty(lin, now, 2) == 10);
	CHECK(kind_of([] { current_penalty(JobSpec::exponential(0, 5, 1, 1), 4, 2); }) == ErrorKind::ReleaseViolation);
}

TEST_CASE("completion penalty")
{
	// M log(M/s_min) term of the greedy lower bound: 16 * 4
	CHECK(completion_penalty(JobSpec::linear(0, 0, 4, 16), 4, 2) == 64);
	// M x^t term at M=16, t=12: 1 * 2^16
	CHECK(completion_penalty(JobSpec::exponential(0, 0, 16, 1), 16, 2) == 65536);
	CHECK(completion_penalty(JobSpec::exponential(0, 3, 1, 4), 4, 2) == 8);
	CHECK(kind_of([] { completion_penalty(JobSpec::linear(0, 2, 3, 1), 4, 2); }) == ErrorKind::InfeasibleCompletion);
}

TEST_CASE("exact power survives hundreds of doublings")
{
	const BigInt expected("2037035976334486086268445688409378161051468393665936250636140449354381299763336706183397376");
	CHECK(power(2, 300) == expected);
	CHECK(power(2, 300) == ref_pow(2, 300));
	CHECK(power(3, 10000) == ref_pow(3, 10000));
	CHECK(completion_penalty(JobSpec::exponential(0, 0, 1, 7), 300, 2) == 7 * expected);
}

TEST_CASE("potential")
{
	CHECK(potential(12, 5, 2) == 384);
	CHECK(potential(1, 1, 2) == 2);
	CHECK(kind_of([] { potential(1, 0, 2); }) == ErrorKind::CompletedJob);

	std::mt19937_64 rng(7);
	for (int i = 0; i < 200; ++i) {
		const Base x = 2 + rng() % 4;
		const BigInt s = 1 + rng() % 1000;
		const Time rem = 2 + static_cast<Time>(rng() % 20);
		// processing one unit: s' grows by x, remaining drops by one
		CHECK(potential(s * x, rem - 1, x) == potential(s, rem, x));
		// waiting one unit: s' grows by x, remaining unchanged
		CHECK(potential(s * x, rem, x) == x * potential(s, rem, x));
	}
}

TEST_CASE("exponential order key")
{
	const Ratio a = exp_order_key(4, 1, 2);
	const Ratio b = exp_order_key(3, 2, 2);
	CHECK(a == 8);
	CHECK(b == 4);
	// both orders from a common release at 0
	const BigInt a_then_b = 4 * ref_pow(2, 1) + 3 * ref_pow(2, 3);
	const BigInt b_then_a = 3 * ref_pow(2, 2) + 4 * ref_pow(2, 3);
	CHECK(a_then_b == 32);
	CHECK(b_then_a == 44);
	CHECK(a > b);

	CHECK(exp_order_key(5, 3, 3) == exp_order_key(5, 3, 3));
	CHECK(exp_order_key(1, 1, 2) == 2);
	CHECK(kind_of([] { exp_order_key(1, 0, 2); }) == ErrorKind::CompletedJob);
}

TEST_CASE("smith key")
{
	CHECK(smith_key(3, 1) == Ratio(1, 3));
	CHECK(smith_key(4, 2) == Ratio(1, 2));
	CHECK(smith_key(1, 3) == 3);
	CHECK(smith_key(2, 2) == smith_key(1, 1));
	CHECK(smith_key(1, 1) == 1);

	// all six orders of (t,w) = (1,3),(2,4),(3,1)
	const Instance inst(2, {JobSpec::linear(0, 0, 1, 3), JobSpec::linear(1, 0, 2, 4), JobSpec::linear(2, 0, 3, 1)});
	CHECK(expsched::testing::ref_best_permutation(inst) == 21);
	CHECK(expsched::testing::ref_sequence_cost(inst, {0, 1, 2}) == 21);

	const Instance tie(2, {JobSpec::linear(0, 0, 2, 2), JobSpec::linear(1, 0, 1, 1)});
	CHECK(expsched::testing::ref_sequence_cost(tie, {0, 1}) == expsched::testing::ref_sequence_cost(tie, {1, 0}));
}

TEST_CASE("exchange orders are optimal for a common release")
{
	std::mt19937_64 rng(2024);
	for (int round = 0; round < 60; ++round) {
		const std::size_t n = 1 + rng() % 6;
		std::vector<JobSpec> lin, exp;
		const Base x = 2 + rng() % 2;
		for (std::size_t i = 0; i < n; ++i) {
			lin.push_back(JobSpec::linear(i, 3, 1 + rng() % 5, 1 + rng() % 9));
			exp.push_back(JobSpec::exponential(i, 3, 1 + rng() % 4, 1 + rng() % 9));
		}
		const Instance li(x, lin), ei(x, exp);

		std::vector<JobId> order(n);
		std::iota(order.begin(), order.end(), JobId{0});
		auto smith = order;
		std::stable_sort(smith.begin(), smith.end(), [&](JobId a, JobId b) {
			return smith_key(li.job(a).weight(), li.job(a).work) < smith_key(li.job(b).weight(), li.job(b).work);
		});
		CHECK(expsched::testing::ref_sequence_cost(li, smith) == expsched::testing::ref_best_permutation(li));

		auto swap_order = order;
		std::stable_sort(swap_order.begin(), swap_order.end(), [&](JobId a, JobId b) {
			return exp_order_key(ei.job(a).start_penalty(), ei.job(a).work, x) >
			       exp_order_key(ei.job(b).start_penalty(), ei.job(b).work, x);
		});
		CHECK(expsched::testing::ref_sequence_cost(ei, swap_order) == expsched::testing::ref_best_permutation(ei));
	}
}

TEST_CASE("instance validation and derived constants")
{
	const Instance inst(2, {JobSpec::exponential(1, 0, 2, 5), JobSpec::linear(0, 1, 1, 9), JobSpec::linear(2, 4, 3, 3),
	                        JobSpec::exponential(3, 2, 1, 2)});
	CHECK(inst.size() == 4);
	CHECK(inst.job(0).is_linear());
	CHECK(inst.max_weight() == 9);
	CHECK(inst.min_start_penalty() == BigInt(2));
	CHECK(inst.horizon() == 4 + 7);
	CHECK_FALSE(inst.common_release());

	const Instance exp_only(3, {JobSpec::exponential(0, 0, 1, 1)});
	CHECK(exp_only.max_weight() == 0);
	const Instance lin_only(3, {JobSpec::linear(0, 0, 1, 1)});
	CHECK_FALSE(lin_only.min_start_penalty().has_value());

	CHECK(kind_of([] { Instance(1, {JobSpec::linear(0, 0, 1, 1)}); }) == ErrorKind::InvalidInstance);
	CHECK(kind_of([] { Instance(2, {}); }) == ErrorKind::InvalidInstance);
	CHECK(kind_of([] { Instance(2, {JobSpec::linear(0, 0, 1, 1), JobSpec::linear(0, 0, 1, 1)}); }) ==
	      ErrorKind::InvalidInstance);
	CHECK(kind_of([] { Instance(2, {JobSpec::linear(1, 0, 1, 1)}); }) == ErrorKind::InvalidInstance);
	CHECK(kind_of([] { Instance(2, {JobSpec::linear(0, 0, 0, 1)}); }) == ErrorKind::InvalidInstance);
	CHECK(kind_of([] { Instance(2, {JobSpec::exponential(0, 0, 1, 0)}); }) == ErrorKind::InvalidInstance);
	CHECK(kind_of([] { Instance(2, {JobSpec::linear(0, -1, 1, 1)}); }) == ErrorKind::InvalidInstance);
	CHECK(kind_of([] { (void)JobSpec::linear(0, 0, 1, 1).start_penalty(); }) == ErrorKind::UnsupportedInstance);
}

TEST_CASE("exact helpers")
{
	CHECK(ceil_log(2, Ratio(16)) == 4);
	CHECK(ceil_log(2, Ratio(17)) == 5);
	CHECK(ceil_log(2, Ratio(1)) == 0);
	CHECK(ceil_log(2, Ratio(1, 8)) == -3);
	CHECK(ceil_log(2, Ratio(3, 16)) == -2);
	CHECK(ceil_log(3, Ratio(28, 3)) == 3);
	CHECK(exact_log(2, 1024) == 10);
	CHECK_FALSE(exact_log(2, 12).has_value());
	CHECK(ceil_sqrt(Ratio(16)) == 4);
	CHECK(ceil_sqrt(Ratio(17)) == 5);
	CHECK(ceil_sqrt(Ratio(1, 4)) == 1);
	CHECK(ceil_sqrt(Ratio(0)) == 0);
	CHECK(to_string(Ratio(2050, 136)) == "1025/68");
	CHECK(to_decimal(Ratio(1025, 68), 2) == "15.07");
	CHECK(parse_bigint("-42") == -42);
	CHECK_THROWS_AS(parse_bigint("4x"), Error);
}
