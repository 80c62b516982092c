#pragma once

#include <cstddef>
#include <vector>

namespace silink {

// Uniform frequency grid f_k = (k+1)*df, k = 0..n-1. There is deliberately no
// DC point: several element formulas (internal inductance ~ 1/sqrt(f)) are
// singular at f = 0, and time-domain code extrapolates DC itself.
class FrequencyGrid {
public:
	FrequencyGrid(double f_max, size_t n);

	size_t size() const { return m_n; }
	double df() const { return m_df; }
	double f_max() const { return m_f_max; }
	double operator[](size_t k) const { return static_cast<double>(k + 1) * m_df; }

	// Index of the grid point nearest to f.
	size_t index_of(double f) const;

	std::vector<double> points() const;

	bool operator==(const FrequencyGrid &other) const {
		return m_n == other.m_n && m_df == other.m_df;
	}
	bool operator!=(const FrequencyGrid &other) const { return !(*this == other); }

private:
	double m_f_max;
	double m_df;
	size_t m_n;
};

FrequencyGrid make_grid(double f_max, size_t n);

} // namespace silink
