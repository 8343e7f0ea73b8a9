// Serial reference against the OpenMP sweep on the same grid.

#include <benchmark/benchmark.h>

#include "expsched/experiments.hpp"

namespace {

	expsched::SweepConfig make_config(std::int64_t seeds)
	{
		expsched::SweepConfig cfg;
		cfg.base.family = expsched::Family::Random;
		cfg.base.n_max = 5;
		cfg.base.t_max = 4;
		cfg.base.r_max = 3;
		cfg.base.v_max = 16;
		cfg.grid = {expsched::GridAxis{"seed", {}}};
		for (std::int64_t s = 1; s <= seeds; ++s)
			cfg.grid[0].values.push_back(s);
		cfg.policies = {expsched::PolicyKind::Naive, expsched::PolicyKind::Threshold, expsched::PolicyKind::ExpFirst};
		return cfg;
	}

	void BM_SweepSerial(benchmark::State& state)
	{
		const auto cfg = make_config(state.range(0));
		for (auto _ : state)
			benchmark::DoNotOptimize(expsched::sweep_serial(cfg));
		state.SetItemsProcessed(state.iterations() * state.range(0));
	}

	void BM_SweepParallel(benchmark::State& state)
	{
		const auto cfg = make_config(state.range(0));
		for (auto _ : state)
			benchmark::DoNotOptimize(expsched::sweep(cfg));
		state.SetItemsProcessed(state.iterations() * state.range(0));
	}

	void BM_Oracle(benchmark::State& state)
	{
		const auto inst = expsched::gen_identical_exp(static_cast<std::size_t>(state.range(0)), 1, 4, 2);
		for (auto _ : state)
			benchmark::DoNotOptimize(expsched::optimal_cost(inst));
	}

} // namespace

BENCHMARK(BM_SweepSerial)->Arg(64)->Arg(256)->UseRealTime();
BENCHMARK(BM_SweepParallel)->Arg(64)->Arg(256)->UseRealTime();
BENCHMARK(BM_Oracle)->DenseRange(2, 6);

BENCHMARK_MAIN();
