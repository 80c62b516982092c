#include "silink/grid.h"

#include <algorithm>
#include <cmath>

#include "silink/errors.h"

namespace silink {

FrequencyGrid::FrequencyGrid(double f_max, size_t n) : m_f_max(f_max), m_n(n) {
	if (!(f_max > 0.0))
		throw InvalidArgument("frequency grid f_max must be positive");
	if (n < 2)
		throw InvalidArgument("frequency grid needs at least 2 points");
	m_df = f_max / static_cast<double>(n);
}

size_t FrequencyGrid::index_of(double f) const {
	double k = std::round(f / m_df) - 1.0;
	k = std::clamp(k, 0.0, static_cast<double>(m_n - 1));
	return static_cast<size_t>(k);
}

std::vector<double> FrequencyGrid::points() const {
	std::vector<double> p(m_n);
	for (size_t k = 0; k < m_n; ++k)
		p[k] = (*this)[k];
	return p;
}

FrequencyGrid make_grid(double f_max, size_t n) {
	return FrequencyGrid(f_max, n);
}

} // namespace silink
