#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "silink/channel.h"
#include "silink/timedomain.h"

namespace silink {

struct RxConfig {
	size_t dfe_taps = 0;                  // ideal taps, h1..hN cancelled exactly
	size_t samples_per_ui_phase_grid = 32; // sampling-phase candidates per UI
};

struct MaskSpec {
	double min_eye_height = 0.040; // volts
};

struct EyeResult {
	double eye_height = 0.0;   // volts; 2*(cursor - residual_isi), may be < 0
	double best_phase = 0.0;   // fraction of a UI, in [0, 1)
	double cursor = 0.0;       // volts, h0 at the best phase
	double residual_isi = 0.0; // volts, uncancelled |pre| + |post| sum
	std::vector<double> dfe_tap_values; // cancelled postcursors, length = dfe_taps
};

EyeResult dfe_eye(const PulseResponse &pulse, const RxConfig &rx);

bool passes_mask(const EyeResult &eye, const MaskSpec &mask);

// Baseline channel family: total_len_ui of stripline with bulk loss
// `total_loss_db` at Nyquist split between skin effect and dielectric,
// broken by identical vias at via_positions_ui.
struct ChannelTemplate {
	double data_rate = 10e9;
	double total_len_ui = 25.0;
	std::vector<double> via_positions_ui = {25.0 / 3.0, 50.0 / 3.0};
	double loss_split = 0.5; // fraction of total loss in the dielectric term
	double skew_ui = 0.0;    // total pair skew across the channel
	double db_rdc = 0.0;
	double z_ohf = 50.0;
	ViaFlavor via_flavor = ViaFlavor::Capacitive;
};

struct GridSpec {
	size_t samples_per_ui = 32;
	size_t window_ui = 128;
};

ChannelTopology baseline_topology(const ChannelTemplate &tmpl, double rv_db,
                                  double total_loss_db);

FrequencyGrid analysis_grid(const ChannelTemplate &tmpl, const GridSpec &gs);

// Eye height of the baseline channel at one (rv, loss, taps) operating point.
double eye_height_for(const ChannelTemplate &tmpl, const GridSpec &gs,
                      double rv_db, double total_loss_db, size_t dfe_taps,
                      double amplitude = 0.5);

// Largest total stripline loss (dB at Nyquist) the link tolerates while
// still passing the mask, to 0.5 dB resolution.  NaN when the link fails
// at zero loss; capped at loss_cap_db.
double max_loss_at(const ChannelTemplate &tmpl, const GridSpec &gs,
                   double rv_db, size_t dfe_taps,
                   const MaskSpec &mask = MaskSpec{},
                   double loss_cap_db = 40.0);

struct CurvePoint {
	double rv_db;
	double max_loss_db; // NaN = fails even with lossless striplines
};

struct PerformanceCurve {
	size_t dfe_taps = 0;
	double resolution_db = 0.5;
	std::vector<CurvePoint> points; // ascending rv_db
};

PerformanceCurve performance_curve(const ChannelTemplate &tmpl,
                                   const GridSpec &gs, double rv_min_db,
                                   double rv_max_db, double rv_step_db,
                                   size_t dfe_taps,
                                   const MaskSpec &mask = MaskSpec{},
                                   double loss_cap_db = 40.0);

// ---- case studies ------------------------------------------------------

// Two vias, fixed 25 UI channel, three spacings.  ripple_db is the spread
// of the via-induced insertion-loss deviation around Nyquist at a
// representative operating point (rv -6 dB, 10 dB loss).
struct ViaSpacingRow {
	double spacing_ui;
	std::vector<double> via_positions_ui;
	std::vector<double> max_loss_db; // one per rv point
	double ripple_db;
};

struct ViaSpacingStudy {
	std::vector<double> rv_db;
	size_t dfe_taps;
	std::vector<ViaSpacingRow> rows;
};

ViaSpacingStudy study_via_spacing(const ChannelTemplate &tmpl,
                                  const GridSpec &gs);

// Loss-split sensitivity: via-free channel, tap counts 0..12, all-skin /
// balanced / all-dielectric loss.
struct LossSplitStudy {
	std::vector<size_t> taps;
	std::vector<double> splits;
	// max_loss_db[i][j] = splits[i], taps[j]
	std::vector<std::vector<double>> max_loss_db;
};

LossSplitStudy study_loss_split(const ChannelTemplate &tmpl,
                                const GridSpec &gs);

// P/N length mismatch: tolerable loss vs total skew, with and without vias.
struct SkewStudy {
	std::vector<double> skew_ui;
	size_t dfe_taps;
	double rv_db;                      // via setting for the with-vias rows
	std::vector<double> with_vias_db;
	std::vector<double> without_vias_db;
};

SkewStudy study_skew(const ChannelTemplate &tmpl, const GridSpec &gs);

// Via count: two / three / four evenly placed vias over the same length.
struct ViaCountStudy {
	std::vector<double> rv_db;
	size_t dfe_taps;
	std::vector<size_t> counts;
	// max_loss_db[i][j] = counts[i], rv_db[j]
	std::vector<std::vector<double>> max_loss_db;
};

ViaCountStudy study_via_count(const ChannelTemplate &tmpl, const GridSpec &gs);

// Crosstalk, frequency vs time: t-line via pair embedded in striplines,
// stub length swept; broadband coupled level at Nyquist translated to
// millivolts against transient peak-to-peak for each trace.
struct XtalkFvtRow {
	double stub_mm;
	std::array<double, 4> bb_db;    // hull level at f1, dB
	std::array<double, 4> freq_mv;  // (4/pi)*10^(bb/20)*1000
	std::array<double, 4> pulse_mv; // transient pulse p2p
	std::array<double, 4> step_mv;  // transient step p2p
	std::array<double, 4> ratio;    // pulse_mv / freq_mv
};

struct XtalkFvtStudy {
	std::array<std::string, 4> trace_names; // NEXT-top, NEXT-stripline, FEXT-top, FEXT-stripline
	double data_rate;
	double rise_ui;
	std::vector<XtalkFvtRow> rows;
};

XtalkFvtStudy study_xtalk_freq_vs_time();

} // namespace silink
