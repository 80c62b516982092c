#include "silink/twoport.h"

#include <cmath>

#include "silink/errors.h"

namespace silink {

TwoPortABCD::TwoPortABCD(const FrequencyGrid &g)
	: grid(g), a(g.size()), b(g.size()), c(g.size()), d(g.size()) {}

TwoPortABCD TwoPortABCD::identity(const FrequencyGrid &g) {
	TwoPortABCD m(g);
	for (size_t k = 0; k < g.size(); ++k) {
		m.a[k] = 1.0;
		m.b[k] = 0.0;
		m.c[k] = 0.0;
		m.d[k] = 1.0;
	}
	return m;
}

double TwoPortABCD::max_det_error() const {
	double worst = 0.0;
	for (size_t k = 0; k < grid.size(); ++k)
		worst = std::max(worst, std::abs(a[k] * d[k] - b[k] * c[k] - 1.0));
	return worst;
}

TwoPortABCD cascade(const TwoPortABCD &x, const TwoPortABCD &y) {
	if (x.grid != y.grid)
		throw InvalidArgument("cascade: frequency grids differ");
	TwoPortABCD m(x.grid);
	for (size_t k = 0; k < x.grid.size(); ++k) {
		m.a[k] = x.a[k] * y.a[k] + x.b[k] * y.c[k];
		m.b[k] = x.a[k] * y.b[k] + x.b[k] * y.d[k];
		m.c[k] = x.c[k] * y.a[k] + x.d[k] * y.c[k];
		m.d[k] = x.c[k] * y.b[k] + x.d[k] * y.d[k];
	}
	return m;
}

TwoPortABCD shunt_admittance_abcd(const std::vector<cplx> &y, const FrequencyGrid &grid) {
	if (y.size() != grid.size())
		throw InvalidArgument("shunt_admittance_abcd: value count does not match grid");
	TwoPortABCD m = TwoPortABCD::identity(grid);
	for (size_t k = 0; k < grid.size(); ++k)
		m.c[k] = y[k];
	return m;
}

TwoPortABCD series_impedance_abcd(const std::vector<cplx> &z, const FrequencyGrid &grid) {
	if (z.size() != grid.size())
		throw InvalidArgument("series_impedance_abcd: value count does not match grid");
	TwoPortABCD m = TwoPortABCD::identity(grid);
	for (size_t k = 0; k < grid.size(); ++k)
		m.b[k] = z[k];
	return m;
}

TwoPortABCD line_abcd(const std::vector<cplx> &gamma_total, const std::vector<cplx> &zc,
                      const FrequencyGrid &grid) {
	if (gamma_total.size() != grid.size() || zc.size() != grid.size())
		throw InvalidArgument("line_abcd: value count does not match grid");
	TwoPortABCD m(grid);
	for (size_t k = 0; k < grid.size(); ++k) {
		cplx ch = std::cosh(gamma_total[k]);
		cplx sh = std::sinh(gamma_total[k]);
		m.a[k] = ch;
		m.b[k] = zc[k] * sh;
		m.c[k] = sh / zc[k];
		m.d[k] = ch;
	}
	return m;
}

TwoPortABCD delay_line_abcd(double z, double delay, const FrequencyGrid &grid) {
	std::vector<cplx> gamma(grid.size()), zc(grid.size(), cplx(z, 0.0));
	for (size_t k = 0; k < grid.size(); ++k)
		gamma[k] = cplx(0.0, 2.0 * M_PI * grid[k] * delay);
	return line_abcd(gamma, zc, grid);
}

} // namespace silink
