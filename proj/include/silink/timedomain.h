#pragma once

#include <cstddef>
#include <vector>

#include "silink/channel.h"
#include "silink/grid.h"
#include "silink/nports.h"
#include "silink/twoport.h"

namespace silink {

struct TimeSeries {
	std::vector<double> samples;
	double dt = 0.0;
	double t0 = 0.0;
};

struct PulseResponse {
	TimeSeries series;
	double ui = 0.0;
	size_t samples_per_ui = 0;
	double amplitude = 0.0;
};

// Time series of length 2*n from a one-sided transfer function sampled on
// `grid` (n points, f_k = (k+1)*df).  DC is extrapolated from the two
// lowest points in magnitude (clamped at zero), the top 10% of the band
// gets a raised-cosine taper, and the spectrum is extended Hermitian
// before the inverse transform.  dt = 1/(2*f_max).
TimeSeries impulse_response(const std::vector<cplx> &transfer,
                            const FrequencyGrid &grid);

// Running sum of the impulse response scaled by `amplitude` (exact unit
// step for a flat transfer function).
TimeSeries step_from_transfer(const std::vector<cplx> &transfer,
                              const FrequencyGrid &grid,
                              double amplitude = 1.0);

// Response to a single unit interval of drive: amplitude * (step(t) -
// step(t - ui)).  Requires at least 16 samples per UI on this grid.
PulseResponse pulse_from_transfer(const std::vector<cplx> &transfer,
                                  const FrequencyGrid &grid, double ui,
                                  double amplitude = 0.5);

// Pulse response of the assembled victim path (S21 of assemble_victim).
PulseResponse pulse_response(const ChannelTopology &top,
                             const FrequencyGrid &grid,
                             double amplitude = 0.5);

enum class DriveSide { Top, Stripline };
enum class Stimulus { Pulse, Step };
enum class XtalkPath { Next, Fext };

// Peak-to-peak coupled voltage on the victim line of a coupled 4-port
// (ports as produced by the element builders: 0/1 victim, 2/3 aggressor,
// even = Top/TX end).  The aggressor edge may be band-limited with a
// linear-phaseless sinc roll-off of `rise_ui` unit intervals; 0 keeps the
// ideal edge.
double xtalk_p2p(const NPortS &coupled4, DriveSide side, Stimulus stim,
                 XtalkPath path, double data_rate, double rise_ui = 0.0,
                 double amplitude = 1.0);

} // namespace silink
