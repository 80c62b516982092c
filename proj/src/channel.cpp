#include "silink/channel.h"

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "silink/errors.h"
#include "silink/twoport.h"

namespace silink {

namespace {

bool is_coupled(const Element &el) {
	if (const auto *lv = std::get_if<LumpedViaSpec>(&el))
		return lv->xtalk_db.has_value();
	return std::holds_alternative<TlineViaSpec>(el);
}

TwoPortABCD element_abcd(const Element &el, const FrequencyGrid &grid,
                         double z0, Leg leg) {
	if (const auto *sl = std::get_if<StriplineSpec>(&el))
		return stripline_abcd(*sl, grid, leg);
	if (const auto *lv = std::get_if<LumpedViaSpec>(&el))
		return lumped_via_pairleg(*lv, grid, z0);
	if (const auto *tv = std::get_if<TlineViaSpec>(&el)) {
		// victim path with the aggressor line matched-terminated
		NPortS s4 = tline_via_4port(*tv, grid, z0);
		return s_to_abcd(subnetwork2(s4, 0, 1));
	}
	const auto &tc = std::get<TerminalCap>(el);
	TwoPortABCD sh(grid);
	for (size_t k = 0; k < grid.size(); ++k) {
		double w = 2.0 * M_PI * grid[k];
		sh.a[k] = 1.0;
		sh.b[k] = 0.0;
		sh.c[k] = cplx(0.0, w * tc.c);
		sh.d[k] = 1.0;
	}
	return sh;
}

TwoPortABCD chain_abcd(const std::vector<Element> &els, size_t first,
                       size_t last, const FrequencyGrid &grid, double z0,
                       Leg leg) {
	TwoPortABCD m = TwoPortABCD::identity(grid);
	for (size_t i = first; i < last; ++i)
		m = cascade(m, element_abcd(els[i], grid, z0, leg));
	return m;
}

NPortS chain_diff_s(const std::vector<Element> &els, size_t first, size_t last,
                    const FrequencyGrid &grid, double z0) {
	NPortS sa = abcd_to_s(chain_abcd(els, first, last, grid, z0, Leg::A), z0);
	NPortS sb = abcd_to_s(chain_abcd(els, first, last, grid, z0, Leg::B), z0);
	return differential_from_legs(sa, sb);
}

double f1_of(const ChannelTopology &top) { return 0.5 * top.data_rate; }

// Clamped linear interpolation on an ascending grid (numpy-style ends).
double interp_clamped(double xq, const std::vector<double> &x,
                      const std::vector<double> &y) {
	if (xq <= x.front())
		return y.front();
	if (xq >= x.back())
		return y.back();
	size_t hi = static_cast<size_t>(
	    std::upper_bound(x.begin(), x.end(), xq) - x.begin());
	size_t lo = hi - 1;
	double t = (xq - x[lo]) / (x[hi] - x[lo]);
	return y[lo] + t * (y[hi] - y[lo]);
}

// Upper convex hull of (x, y) points, evaluated at xq; the end segments
// extrapolate.
double upper_hull_at(std::vector<std::pair<double, double>> pts, double xq) {
	std::sort(pts.begin(), pts.end());
	if (pts.size() < 2)
		throw InvalidArgument("upper_hull_at: need at least two points");
	std::vector<std::pair<double, double>> hull;
	for (const auto &p : pts) {
		while (hull.size() >= 2) {
			auto [x1, y1] = hull[hull.size() - 2];
			auto [x2, y2] = hull.back();
			// drop the last point if it sits below the chord to p
			if ((x2 - x1) * (p.second - y1) - (p.first - x1) * (y2 - y1) >= 0.0)
				hull.pop_back();
			else
				break;
		}
		hull.push_back(p);
	}
	size_t i;
	if (xq <= hull.front().first)
		i = 0;
	else if (xq >= hull.back().first)
		i = hull.size() - 2;
	else {
		i = 0;
		while (!(hull[i].first <= xq && xq <= hull[i + 1].first))
			++i;
	}
	auto [x1, y1] = hull[i];
	auto [x2, y2] = hull[i + 1];
	return y1 + (y2 - y1) * (xq - x1) / (x2 - x1);
}

} // namespace

void validate(const ChannelTopology &top) {
	if (top.data_rate <= 0.0)
		throw InvalidArgument("data_rate must be positive");
	if (top.z0 <= 0.0)
		throw InvalidArgument("z0 must be positive");
	if (top.elements.empty())
		throw InvalidArgument("topology needs at least one element");
	double f1 = f1_of(top);
	for (size_t i = 0; i < top.elements.size(); ++i) {
		const Element &el = top.elements[i];
		if (const auto *sl = std::get_if<StriplineSpec>(&el)) {
			validate(*sl);
			if (std::abs(sl->f1 - f1) > 1e-6 * f1)
				throw InvalidArgument("stripline f1 must equal data_rate/2");
		} else if (const auto *lv = std::get_if<LumpedViaSpec>(&el)) {
			validate(*lv);
			if (std::abs(lv->f1 - f1) > 1e-6 * f1)
				throw InvalidArgument("via f1 must equal data_rate/2");
		} else if (const auto *tv = std::get_if<TlineViaSpec>(&el)) {
			validate(*tv);
		} else {
			const auto &tc = std::get<TerminalCap>(el);
			if (tc.c < 0.0)
				throw InvalidArgument("terminal capacitance must be non-negative");
			if (i != 0 && i + 1 != top.elements.size())
				throw InvalidArgument(
				    "terminal cap must be the first or last element");
		}
	}
}

NPortS assemble_victim(const ChannelTopology &top, const FrequencyGrid &grid) {
	validate(top);
	return chain_diff_s(top.elements, 0, top.elements.size(), grid, top.z0);
}

NPortS assemble_coupled(const ChannelTopology &top, const FrequencyGrid &grid) {
	validate(top);
	if (top.aggressor_route == AggressorRoute::None)
		throw UnsupportedTopology("coupled assembly needs an aggressor route");
	size_t idx = top.elements.size();
	size_t n_coupled = 0;
	for (size_t i = 0; i < top.elements.size(); ++i) {
		if (is_coupled(top.elements[i])) {
			idx = i;
			++n_coupled;
		}
	}
	if (n_coupled != 1)
		throw UnsupportedTopology(
		    "coupled assembly needs exactly one coupled element");

	NPortS cur = [&]() {
		const Element &el = top.elements[idx];
		if (const auto *lv = std::get_if<LumpedViaSpec>(&el))
			return coupled_lumped_via_4port(*lv, grid, top.z0);
		return tline_via_4port(std::get<TlineViaSpec>(el), grid, top.z0);
	}();

	// External labels riding along through the connects:
	// 0 victim TX, 1 victim RX, 2 aggressor TX side, 3 aggressor RX side.
	std::vector<size_t> labels = {0, 1, 2, 3};
	auto attach = [&](const NPortS &chain, size_t chain_port, size_t label) {
		size_t pos = static_cast<size_t>(
		    std::find(labels.begin(), labels.end(), label) - labels.begin());
		cur = connect(cur, pos, chain, chain_port);
		// remaining ports of `cur` keep their order, then the chain's far port
		labels.erase(labels.begin() + static_cast<std::ptrdiff_t>(pos));
		labels.push_back(label);
	};

	if (idx > 0) {
		// both lines see an identical copy of the leading chain
		NPortS pre = chain_diff_s(top.elements, 0, idx, grid, top.z0);
		attach(pre, 1, 0);
		attach(pre, 1, 2);
	}
	if (idx + 1 < top.elements.size()) {
		NPortS post =
		    chain_diff_s(top.elements, idx + 1, top.elements.size(), grid, top.z0);
		attach(post, 0, 1);
		attach(post, 0, 3);
	}

	std::vector<size_t> perm(4);
	for (size_t want = 0; want < 4; ++want)
		perm[want] = static_cast<size_t>(
		    std::find(labels.begin(), labels.end(), want) - labels.begin());
	return permute_ports(cur, perm);
}

size_t aggressor_drive_port(AggressorRoute route) {
	switch (route) {
	case AggressorRoute::SameDirection:
		return 2;
	case AggressorRoute::Opposing:
		return 3;
	default:
		throw InvalidArgument("no aggressor in this route");
	}
}

double broadband_level(const std::vector<double> &trace_db,
                       const FrequencyGrid &grid, double f1) {
	size_t n = grid.size();
	if (trace_db.size() != n)
		throw InvalidArgument("broadband_level: trace/grid size mismatch");
	if (f1 <= 0.0 || grid.f_max() < 2.0 * f1 * (1.0 - 1e-9))
		throw InvalidArgument("broadband_level: grid must span (0, 2*f1]");

	std::vector<double> f(n), tr(n);
	for (size_t k = 0; k < n; ++k) {
		f[k] = grid[k];
		tr[k] = std::max(trace_db[k], kFloorDb);
	}
	size_t m = 0;
	while (m < n && f[m] <= 2.0 * f1)
		++m;

	bool all_floor = true;
	for (size_t k = 0; k < m; ++k)
		if (tr[k] > kFloorDb + 1e-12) {
			all_floor = false;
			break;
		}
	if (all_floor)
		return kFloorDb;

	std::vector<std::pair<double, double>> maxima;
	for (size_t i = 1; i + 1 < m; ++i)
		if (tr[i] > tr[i - 1] && tr[i] >= tr[i + 1])
			maxima.emplace_back(f[i], tr[i]);
	if (maxima.size() < 2)
		return interp_clamped(f1, f, tr);
	double val = upper_hull_at(maxima, f1);
	return std::max(std::min(val, 0.0), kFloorDb);
}

ChannelMetrics metrics(const ChannelTopology &top, const FrequencyGrid &grid) {
	NPortS s = assemble_victim(top, grid);
	double f1 = f1_of(top);
	size_t i1 = grid.index_of(f1);
	auto db = [](cplx v) {
		return 20.0 * std::log10(std::max(std::abs(v), 1e-30));
	};

	ChannelMetrics out;
	out.il_at_nyquist = db(s.at(i1, 1, 0));
	out.rv_at_nyquist = db(s.at(i1, 0, 0));

	std::vector<double> refl(grid.size());
	for (size_t k = 0; k < grid.size(); ++k)
		refl[k] = db(s.at(k, 0, 0));
	out.brv = broadband_level(refl, grid, f1);

	// group delay of S21 at f1 from one grid step of phase; a single step
	// keeps |dphi| < pi for any delay under half the time window
	size_t hi = i1;
	size_t lo = (i1 > 0) ? i1 - 1 : i1 + 1;
	if (lo > hi)
		std::swap(lo, hi);
	double dphi = std::arg(s.at(hi, 1, 0) / s.at(lo, 1, 0));
	out.total_delay = -dphi / (2.0 * M_PI * (grid[hi] - grid[lo]));
	return out;
}

} // namespace silink
