#include <charconv>

#include "expsched/error.hpp"
#include "expsched/experiments.hpp"

namespace expsched {

	namespace {

		std::int64_t parse_int(std::string_view s, std::string_view axis)
		{
			std::int64_t v = 0;
			const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
			if (ec != std::errc() || ptr != s.data() + s.size())
				throw Error(ErrorKind::Parameter, "grid axis '" + std::string(axis) + "': bad value '" + std::string(s) + "'");
			return v;
		}

		ComparisonReport evaluate(const std::string& id, const GeneratorSpec& spec, const SweepConfig& config)
		{
			try {
				return compare(generate(spec), config.policies, config.limits, config.options, id);
			} catch (const std::exception& e) {
				ComparisonReport failed;
				failed.instance_id = id;
				failed.oracle_error = e.what();
				return failed;
			}
		}

		SweepReport assemble(std::vector<ComparisonReport> items)
		{
			SweepReport report;
			report.items = std::move(items);
			for (const auto& r : report.items)
				for (const auto& o : r.outcomes) {
					if (!o.ratio)
						continue;
					auto it = report.max_ratio.find(o.policy);
					if (it == report.max_ratio.end())
						report.max_ratio.emplace(o.policy, *o.ratio);
					else if (*o.ratio > it->second)
						it->second = *o.ratio;
				}
			return report;
		}

	} // namespace

	GridAxis parse_grid_axis(std::string_view text)
	{
		const auto eq = text.find('=');
		if (eq == std::string_view::npos || eq == 0)
			throw Error(ErrorKind::Parameter, "grid axis must look like name=a,b,c or name=lo..hi");
		GridAxis axis{std::string(text.substr(0, eq)), {}};
		std::string_view rest = text.substr(eq + 1);
		while (!rest.empty()) {
			const auto comma = rest.find(',');
			const std::string_view item = rest.substr(0, comma);
			rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
			if (const auto dots = item.find(".."); dots != std::string_view::npos) {
				const std::int64_t lo = parse_int(item.substr(0, dots), axis.name);
				const std::int64_t hi = parse_int(item.substr(dots + 2), axis.name);
				if (hi < lo)
					throw Error(ErrorKind::Parameter, "grid axis '" + axis.name + "': empty range");
				for (std::int64_t v = lo; v <= hi; ++v)
					axis.values.push_back(v);
			} else {
				axis.values.push_back(parse_int(item, axis.name));
			}
		}
		return axis;
	}

	std::vector<std::pair<std::string, GeneratorSpec>> expand_grid(const SweepConfig& config)
	{
		std::vector<std::pair<std::string, GeneratorSpec>> points;
		if (config.grid.empty())
			return points;
		for (const auto& axis : config.grid)
			if (axis.values.empty())
				return points;

		std::vector<std::size_t> index(config.grid.size(), 0);
		while (true) {
			GeneratorSpec spec = config.base;
			std::string id = std::string(to_string(spec.family)) + "/";
			for (std::size_t a = 0; a < config.grid.size(); ++a) {
				const auto& axis = config.grid[a];
				spec.set(axis.name, axis.values[index[a]]);
				id += (a ? ";" : "") + axis.name + "=" + std::to_string(axis.values[index[a]]);
			}
			points.emplace_back(std::move(id), spec);

			std::size_t a = config.grid.size();
			while (a > 0) {
				--a;
				if (++index[a] < config.grid[a].values.size())
					break;
				index[a] = 0;
				if (a == 0)
					return points;
			}
		}
	}

	SweepReport sweep_serial(const SweepConfig& config)
	{
		const auto points = expand_grid(config);
		std::vector<ComparisonReport> items;
		items.reserve(points.size());
		for (const auto& [id, spec] : points)
			items.push_back(evaluate(id, spec, config));
		return assemble(std::move(items));
	}

	SweepReport sweep(const SweepConfig& config)
	{
		const auto points = expand_grid(config);
		std::vector<ComparisonReport> items(points.size());
		const auto count = static_cast<std::int64_t>(points.size());

		#pragma omp parallel for schedule(dynamic)
		for (std::int64_t i = 0; i < count; ++i)
			items[i] = evaluate(points[i].first, points[i].second, config);

		return assemble(std::move(items));
	}

} // namespace expsched
