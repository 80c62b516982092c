#include "silink/link.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "silink/errors.h"
#include "silink/sweep.h"
#include "silink/twoport.h"

namespace silink {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

std::vector<cplx> victim_s21(const ChannelTopology &top,
                             const FrequencyGrid &grid) {
	NPortS s = assemble_victim(top, grid);
	std::vector<cplx> h(grid.size());
	for (size_t k = 0; k < grid.size(); ++k)
		h[k] = s.at(k, 1, 0);
	return h;
}

std::vector<double> victim_s21_db(const ChannelTopology &top,
                                  const FrequencyGrid &grid) {
	std::vector<cplx> h = victim_s21(top, grid);
	std::vector<double> out(h.size());
	for (size_t k = 0; k < h.size(); ++k)
		out[k] = 20.0 * std::log10(std::max(std::abs(h[k]), 1e-30));
	return out;
}

} // namespace

EyeResult dfe_eye(const PulseResponse &pulse, const RxConfig &rx) {
	const std::vector<double> &p = pulse.series.samples;
	size_t spu = pulse.samples_per_ui;
	if (spu == 0 || p.size() < spu)
		throw InvalidArgument("dfe_eye: pulse shorter than one unit interval");
	bool any = false;
	for (double v : p)
		if (v != 0.0) {
			any = true;
			break;
		}
	if (!any)
		throw InvalidArgument("dfe_eye: degenerate all-zero pulse");

	EyeResult best;
	bool have = false;
	std::vector<double> s;
	for (size_t phi = 0; phi < spu; ++phi) {
		s.clear();
		for (size_t i = phi; i < p.size(); i += spu)
			s.push_back(p[i]);
		size_t k0 = 0;
		for (size_t i = 1; i < s.size(); ++i)
			if (s[i] > s[k0])
				k0 = i;
		double h0 = s[k0];
		double resid = 0.0;
		for (size_t i = 0; i < k0; ++i)
			resid += std::abs(s[i]);
		for (size_t i = k0 + 1 + rx.dfe_taps; i < s.size(); ++i)
			resid += std::abs(s[i]);
		double eye = 2.0 * (h0 - resid);
		if (!have || eye > best.eye_height) {
			have = true;
			best.eye_height = eye;
			best.best_phase = static_cast<double>(phi) / static_cast<double>(spu);
			best.cursor = h0;
			best.residual_isi = resid;
			best.dfe_tap_values.assign(rx.dfe_taps, 0.0);
			for (size_t t = 0; t < rx.dfe_taps && k0 + 1 + t < s.size(); ++t)
				best.dfe_tap_values[t] = s[k0 + 1 + t];
		}
	}
	return best;
}

bool passes_mask(const EyeResult &eye, const MaskSpec &mask) {
	if (mask.min_eye_height <= 0.0)
		throw InvalidArgument("mask height must be positive");
	return eye.eye_height >= mask.min_eye_height;
}

ChannelTopology baseline_topology(const ChannelTemplate &tmpl, double rv_db,
                                  double total_loss_db) {
	if (tmpl.total_len_ui <= 0.0)
		throw InvalidArgument("total_len_ui must be positive");
	if (total_loss_db < 0.0)
		throw InvalidArgument("total_loss_db must be non-negative");
	if (tmpl.loss_split < 0.0 || tmpl.loss_split > 1.0)
		throw InvalidArgument("loss_split must be within [0, 1]");
	for (double p : tmpl.via_positions_ui)
		if (p <= 0.0 || p >= tmpl.total_len_ui)
			throw InvalidArgument("via positions must lie inside the channel");

	double f1 = 0.5 * tmpl.data_rate;
	std::vector<double> pos;
	pos.push_back(0.0);
	pos.insert(pos.end(), tmpl.via_positions_ui.begin(),
	           tmpl.via_positions_ui.end());
	pos.push_back(tmpl.total_len_ui);

	ChannelTopology top;
	top.data_rate = tmpl.data_rate;
	top.z0 = 50.0;
	for (size_t i = 0; i + 1 < pos.size(); ++i) {
		double len = pos[i + 1] - pos[i];
		double frac = len / tmpl.total_len_ui;
		if (len > 0.0) {
			StriplineSpec sl;
			sl.f1 = f1;
			sl.len_ui = len;
			sl.skew_ui = tmpl.skew_ui * frac;
			sl.z_ohf = tmpl.z_ohf;
			sl.db_rdc = tmpl.db_rdc;
			sl.db_rac = total_loss_db * (1.0 - tmpl.loss_split) * frac;
			sl.db_gac = total_loss_db * tmpl.loss_split * frac;
			top.elements.emplace_back(sl);
		}
		if (i + 2 < pos.size()) {
			LumpedViaSpec via;
			via.f1 = f1;
			via.rv_db = rv_db;
			via.flavor = tmpl.via_flavor;
			top.elements.emplace_back(via);
		}
	}
	return top;
}

FrequencyGrid analysis_grid(const ChannelTemplate &tmpl, const GridSpec &gs) {
	if (gs.samples_per_ui < 16)
		throw InvalidArgument("samples_per_ui must be at least 16");
	if (gs.window_ui < 2 || gs.window_ui * gs.samples_per_ui % 2 != 0)
		throw InvalidArgument("window_ui too small");
	double f1 = 0.5 * tmpl.data_rate;
	size_t n = gs.window_ui * gs.samples_per_ui / 2;
	return make_grid(static_cast<double>(gs.samples_per_ui) * f1, n);
}

double eye_height_for(const ChannelTemplate &tmpl, const GridSpec &gs,
                      double rv_db, double total_loss_db, size_t dfe_taps,
                      double amplitude) {
	ChannelTopology top = baseline_topology(tmpl, rv_db, total_loss_db);
	FrequencyGrid grid = analysis_grid(tmpl, gs);
	std::vector<cplx> h = victim_s21(top, grid);
	double ui = 1.0 / tmpl.data_rate;
	PulseResponse pulse = pulse_from_transfer(h, grid, ui, amplitude);
	RxConfig rx;
	rx.dfe_taps = dfe_taps;
	rx.samples_per_ui_phase_grid = gs.samples_per_ui;
	return dfe_eye(pulse, rx).eye_height;
}

double max_loss_at(const ChannelTemplate &tmpl, const GridSpec &gs,
                   double rv_db, size_t dfe_taps, const MaskSpec &mask,
                   double loss_cap_db) {
	if (loss_cap_db <= 0.0)
		throw InvalidArgument("loss_cap_db must be positive");
	bool have_prev = false;
	double prev_ok = 0.0;
	for (double loss = 0.0; loss <= loss_cap_db + 1e-9; loss += 1.0) {
		bool ok = eye_height_for(tmpl, gs, rv_db, loss, dfe_taps) >=
		          mask.min_eye_height;
		if (!ok) {
			if (!have_prev)
				return kNan;
			double mid = 0.5 * (prev_ok + loss);
			if (eye_height_for(tmpl, gs, rv_db, mid, dfe_taps) >=
			    mask.min_eye_height)
				return mid;
			return prev_ok;
		}
		prev_ok = loss;
		have_prev = true;
	}
	return loss_cap_db;
}

PerformanceCurve performance_curve(const ChannelTemplate &tmpl,
                                   const GridSpec &gs, double rv_min_db,
                                   double rv_max_db, double rv_step_db,
                                   size_t dfe_taps, const MaskSpec &mask,
                                   double loss_cap_db) {
	if (!(rv_min_db < rv_max_db) || rv_max_db >= 0.0 || rv_step_db <= 0.0)
		throw InvalidArgument("performance_curve: bad rv range");

	PerformanceCurve curve;
	curve.dfe_taps = dfe_taps;
	for (double rv = rv_min_db; rv <= rv_max_db + 1e-9; rv += rv_step_db)
		curve.points.push_back({rv, 0.0});
	parallel_for(curve.points.size(), [&](size_t i) {
		curve.points[i].max_loss_db = max_loss_at(
		    tmpl, gs, curve.points[i].rv_db, dfe_taps, mask, loss_cap_db);
	});
	return curve;
}

ViaSpacingStudy study_via_spacing(const ChannelTemplate &tmpl,
                                  const GridSpec &gs) {
	ViaSpacingStudy study;
	study.dfe_taps = 3;
	for (int rv = -20; rv <= -2; ++rv)
		study.rv_db.push_back(rv);

	const double total = tmpl.total_len_ui;
	struct Placement {
		double spacing;
		std::vector<double> pos;
	};
	std::vector<Placement> placements = {
	    {0.0, {0.46 * total, 0.54 * total}},
	    {0.0, {total / 3.0, 2.0 * total / 3.0}},
	    {0.0, {0.04 * total, 0.96 * total}},
	};
	for (auto &p : placements)
		p.spacing = p.pos[1] - p.pos[0];

	// the via-induced ripple is measured against the via-free channel at a
	// representative operating point
	const double rv_ripple = -6.0, loss_ripple = 10.0;
	FrequencyGrid grid = analysis_grid(tmpl, gs);
	ChannelTemplate free_tmpl = tmpl;
	free_tmpl.via_positions_ui.clear();
	std::vector<double> free_db = victim_s21_db(
	    baseline_topology(free_tmpl, rv_ripple, loss_ripple), grid);
	double f1 = 0.5 * tmpl.data_rate;

	study.rows.resize(placements.size());
	for (size_t r = 0; r < placements.size(); ++r) {
		study.rows[r].spacing_ui = placements[r].spacing;
		study.rows[r].via_positions_ui = placements[r].pos;
		study.rows[r].max_loss_db.resize(study.rv_db.size());

		ChannelTemplate t = tmpl;
		t.via_positions_ui = placements[r].pos;
		std::vector<double> with_db =
		    victim_s21_db(baseline_topology(t, rv_ripple, loss_ripple), grid);
		double dmin = 0.0, dmax = 0.0;
		bool first = true;
		for (size_t k = 0; k < grid.size(); ++k) {
			if (grid[k] < 0.5 * f1 || grid[k] > 1.5 * f1)
				continue;
			double d = with_db[k] - free_db[k];
			if (first) {
				dmin = dmax = d;
				first = false;
			} else {
				dmin = std::min(dmin, d);
				dmax = std::max(dmax, d);
			}
		}
		study.rows[r].ripple_db = dmax - dmin;
	}

	parallel_for(placements.size() * study.rv_db.size(), [&](size_t i) {
		size_t r = i / study.rv_db.size();
		size_t j = i % study.rv_db.size();
		ChannelTemplate t = tmpl;
		t.via_positions_ui = placements[r].pos;
		study.rows[r].max_loss_db[j] =
		    max_loss_at(t, gs, study.rv_db[j], study.dfe_taps);
	});
	return study;
}

LossSplitStudy study_loss_split(const ChannelTemplate &tmpl,
                                const GridSpec &gs) {
	LossSplitStudy study;
	for (size_t t = 0; t <= 12; ++t)
		study.taps.push_back(t);
	study.splits = {0.0, 0.5, 1.0};
	study.max_loss_db.assign(study.splits.size(),
	                         std::vector<double>(study.taps.size(), 0.0));

	parallel_for(study.splits.size() * study.taps.size(), [&](size_t i) {
		size_t si = i / study.taps.size();
		size_t ti = i % study.taps.size();
		ChannelTemplate t = tmpl;
		t.via_positions_ui.clear();
		t.loss_split = study.splits[si];
		study.max_loss_db[si][ti] =
		    max_loss_at(t, gs, -60.0, study.taps[ti]);
	});
	return study;
}

SkewStudy study_skew(const ChannelTemplate &tmpl, const GridSpec &gs) {
	SkewStudy study;
	study.skew_ui = {0.0, 0.1, 0.3, 0.5};
	study.dfe_taps = 3;
	study.rv_db = -4.0;
	study.with_vias_db.resize(study.skew_ui.size());
	study.without_vias_db.resize(study.skew_ui.size());

	parallel_for(2 * study.skew_ui.size(), [&](size_t i) {
		size_t j = i % study.skew_ui.size();
		ChannelTemplate t = tmpl;
		t.skew_ui = study.skew_ui[j];
		if (i < study.skew_ui.size()) {
			study.with_vias_db[j] =
			    max_loss_at(t, gs, study.rv_db, study.dfe_taps);
		} else {
			t.via_positions_ui.clear();
			study.without_vias_db[j] =
			    max_loss_at(t, gs, -60.0, study.dfe_taps);
		}
	});
	return study;
}

ViaCountStudy study_via_count(const ChannelTemplate &tmpl,
                              const GridSpec &gs) {
	ViaCountStudy study;
	study.dfe_taps = 3;
	study.counts = {2, 3, 4};
	for (int rv = -20; rv <= -2; ++rv)
		study.rv_db.push_back(rv);
	study.max_loss_db.assign(study.counts.size(),
	                         std::vector<double>(study.rv_db.size(), 0.0));

	parallel_for(study.counts.size() * study.rv_db.size(), [&](size_t i) {
		size_t ci = i / study.rv_db.size();
		size_t j = i % study.rv_db.size();
		size_t nv = study.counts[ci];
		ChannelTemplate t = tmpl;
		t.via_positions_ui.clear();
		for (size_t k = 0; k < nv; ++k)
			t.via_positions_ui.push_back(static_cast<double>(k + 1) *
			                             tmpl.total_len_ui /
			                             static_cast<double>(nv + 1));
		study.max_loss_db[ci][j] =
		    max_loss_at(t, gs, study.rv_db[j], study.dfe_taps);
	});
	return study;
}

XtalkFvtStudy study_xtalk_freq_vs_time() {
	const double f1 = 10e9;
	const size_t spu = 32, window = 128;
	const size_t n = window * spu / 2;
	const double z0 = 50.0;
	const double data_rate = 2.0 * f1;
	FrequencyGrid grid = make_grid(static_cast<double>(spu) * f1, n);

	XtalkFvtStudy study;
	study.trace_names = {"NEXT-top", "NEXT-stripline", "FEXT-top",
	                     "FEXT-stripline"};
	study.data_rate = data_rate;
	study.rise_ui = 0.3;

	StriplineSpec egress;
	egress.f1 = f1;
	egress.len_ui = 8.33;
	egress.skew_ui = 0.0;
	egress.z_ohf = 50.0;
	egress.db_rdc = 0.0;
	egress.db_rac = 1.0;
	egress.db_gac = 1.0;
	TwoPortABCD egress_abcd = stripline_abcd(egress, grid, Leg::A);

	struct Trace {
		size_t obs, drive;
		DriveSide side;
		XtalkPath path;
	};
	const Trace traces[4] = {
	    {0, 2, DriveSide::Top, XtalkPath::Next},
	    {1, 3, DriveSide::Stripline, XtalkPath::Next},
	    {1, 2, DriveSide::Top, XtalkPath::Fext},
	    {0, 3, DriveSide::Stripline, XtalkPath::Fext},
	};

	std::vector<double> stubs;
	for (int i = 0; i <= 12; ++i)
		stubs.push_back(0.25 * i);
	study.rows.resize(stubs.size());

	parallel_for(stubs.size(), [&](size_t si) {
		TlineViaSpec via;
		via.barrel_len = 1.5e-3;
		via.stub_len = stubs[si] * 1e-3;
		via.z_leg = 45.0;
		via.er = 3.7;
		via.k_xtalk = 0.025;

		auto [even, odd] = tline_via_modal_legs(via, grid);
		NPortS s4 = coupled4_from_modes(cascade(even, egress_abcd),
		                                cascade(odd, egress_abcd), z0);

		XtalkFvtRow &row = study.rows[si];
		row.stub_mm = stubs[si];
		for (size_t t = 0; t < 4; ++t) {
			std::vector<double> tr_db(grid.size());
			for (size_t k = 0; k < grid.size(); ++k)
				tr_db[k] = 20.0 * std::log10(std::max(
				               std::abs(s4.at(k, traces[t].obs, traces[t].drive)),
				               1e-30));
			row.bb_db[t] = broadband_level(tr_db, grid, f1);
			row.freq_mv[t] =
			    (4.0 / M_PI) * std::pow(10.0, row.bb_db[t] / 20.0) * 1000.0;
			row.pulse_mv[t] = 1000.0 * xtalk_p2p(s4, traces[t].side,
			                                     Stimulus::Pulse, traces[t].path,
			                                     data_rate, study.rise_ui, 1.0);
			row.step_mv[t] = 1000.0 * xtalk_p2p(s4, traces[t].side,
			                                    Stimulus::Step, traces[t].path,
			                                    data_rate, study.rise_ui, 1.0);
			row.ratio[t] = row.pulse_mv[t] / row.freq_mv[t];
		}
	});
	return study;
}

} // namespace silink
