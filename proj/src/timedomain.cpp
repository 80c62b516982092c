#include "silink/timedomain.h"

#include <algorithm>
#include <cmath>

#include "silink/errors.h"
#include "silink/fft.h"

namespace silink {

TimeSeries impulse_response(const std::vector<cplx> &transfer,
                            const FrequencyGrid &grid) {
	size_t n = grid.size();
	if (transfer.size() != n)
		throw InvalidArgument("impulse_response: transfer/grid size mismatch");

	// DC point: linear extrapolation in magnitude from the two lowest
	// frequencies; a passive path cannot go negative.
	double dc = std::max(0.0, 2.0 * std::abs(transfer[0]) - std::abs(transfer[1]));

	double fmax = grid.f_max();
	double f_start = 0.9 * fmax;
	std::vector<cplx> hp(n);
	for (size_t k = 0; k < n; ++k) {
		double f = grid[k];
		double taper = 1.0;
		if (f >= f_start)
			taper = 0.5 * (1.0 + std::cos(M_PI * (f - f_start) / (fmax - f_start)));
		hp[k] = transfer[k] * taper;
	}

	std::vector<cplx> spec(2 * n, cplx(0.0, 0.0));
	spec[0] = dc;
	for (size_t k = 0; k < n; ++k)
		spec[1 + k] = hp[k];
	for (size_t k = 0; k + 1 < n; ++k)
		spec[n + 1 + k] = std::conj(hp[n - 2 - k]);

	std::vector<cplx> x = ifft(std::move(spec));

	double max_re = 0.0, max_im = 0.0;
	for (const cplx &v : x) {
		max_re = std::max(max_re, std::abs(v.real()));
		max_im = std::max(max_im, std::abs(v.imag()));
	}
	if (max_im > 1e-9 * std::max(max_re, 1e-300))
		throw NumericalError("impulse_response: non-real inverse transform");

	TimeSeries out;
	out.samples.resize(2 * n);
	for (size_t i = 0; i < x.size(); ++i)
		out.samples[i] = x[i].real();
	out.dt = 1.0 / (2.0 * fmax);
	return out;
}

TimeSeries step_from_transfer(const std::vector<cplx> &transfer,
                              const FrequencyGrid &grid, double amplitude) {
	TimeSeries imp = impulse_response(transfer, grid);
	double acc = 0.0;
	for (double &v : imp.samples) {
		acc += v;
		v = amplitude * acc;
	}
	return imp;
}

PulseResponse pulse_from_transfer(const std::vector<cplx> &transfer,
                                  const FrequencyGrid &grid, double ui,
                                  double amplitude) {
	if (ui <= 0.0)
		throw InvalidArgument("pulse_from_transfer: ui must be positive");
	TimeSeries imp = impulse_response(transfer, grid);
	size_t spu = static_cast<size_t>(std::llround(ui / imp.dt));
	if (spu < 16)
		throw InvalidArgument(
		    "pulse_from_transfer: fewer than 16 samples per unit interval; "
		    "extend the frequency grid");

	std::vector<double> step(imp.samples.size());
	double acc = 0.0;
	for (size_t i = 0; i < imp.samples.size(); ++i) {
		acc += imp.samples[i];
		step[i] = acc;
	}
	PulseResponse out;
	out.series.dt = imp.dt;
	out.series.samples.resize(step.size());
	for (size_t i = 0; i < step.size(); ++i) {
		double v = (i < spu) ? step[i] : step[i] - step[i - spu];
		out.series.samples[i] = amplitude * v;
	}
	out.ui = ui;
	out.samples_per_ui = spu;
	out.amplitude = amplitude;
	return out;
}

PulseResponse pulse_response(const ChannelTopology &top,
                             const FrequencyGrid &grid, double amplitude) {
	NPortS s = assemble_victim(top, grid);
	std::vector<cplx> h(grid.size());
	for (size_t k = 0; k < grid.size(); ++k)
		h[k] = s.at(k, 1, 0);
	double ui = 1.0 / top.data_rate;
	return pulse_from_transfer(h, grid, ui, amplitude);
}

double xtalk_p2p(const NPortS &coupled4, DriveSide side, Stimulus stim,
                 XtalkPath path, double data_rate, double rise_ui,
                 double amplitude) {
	if (coupled4.ports != 4)
		throw InvalidArgument("xtalk_p2p: need a 4-port");
	if (data_rate <= 0.0)
		throw InvalidArgument("xtalk_p2p: data_rate must be positive");
	size_t drive = (side == DriveSide::Top) ? 2 : 3;
	size_t same = (side == DriveSide::Top) ? 0 : 1;
	size_t other = (side == DriveSide::Top) ? 1 : 0;
	size_t obs = (path == XtalkPath::Next) ? same : other;

	const FrequencyGrid &grid = coupled4.grid;
	double ui = 1.0 / data_rate;
	std::vector<cplx> h(grid.size());
	for (size_t k = 0; k < grid.size(); ++k) {
		cplx v = coupled4.at(k, obs, drive);
		if (rise_ui > 0.0) {
			double x = grid[k] * rise_ui * ui;
			v *= std::sin(M_PI * x) / (M_PI * x);
		}
		h[k] = v;
	}

	std::vector<double> wave;
	if (stim == Stimulus::Pulse)
		wave = pulse_from_transfer(h, grid, ui, amplitude).series.samples;
	else
		wave = step_from_transfer(h, grid, amplitude).samples;
	auto [lo, hi] = std::minmax_element(wave.begin(), wave.end());
	return *hi - *lo;
}

} // namespace silink
