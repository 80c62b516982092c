#pragma once

#include <complex>
#include <vector>

#include "silink/grid.h"

namespace silink {

using cplx = std::complex<double>;

// Per-frequency chain (ABCD) matrices, stored as a structure of arrays.
// Reciprocal elements keep det = AD - BC = 1; cascading is matrix product.
struct TwoPortABCD {
	FrequencyGrid grid;
	std::vector<cplx> a, b, c, d;

	explicit TwoPortABCD(const FrequencyGrid &g);

	static TwoPortABCD identity(const FrequencyGrid &g);

	// max |AD - BC - 1| over the grid
	double max_det_error() const;
};

TwoPortABCD cascade(const TwoPortABCD &x, const TwoPortABCD &y);

// [1, 0; y, 1]
TwoPortABCD shunt_admittance_abcd(const std::vector<cplx> &y, const FrequencyGrid &grid);
// [1, z; 0, 1]
TwoPortABCD series_impedance_abcd(const std::vector<cplx> &z, const FrequencyGrid &grid);

// Uniform line section from per-frequency propagation (gamma, already scaled by
// length) and characteristic impedance.
TwoPortABCD line_abcd(const std::vector<cplx> &gamma_total, const std::vector<cplx> &zc,
                      const FrequencyGrid &grid);

// Lossless line of fixed delay and impedance (convenience wrapper).
TwoPortABCD delay_line_abcd(double z, double delay, const FrequencyGrid &grid);

} // namespace silink
