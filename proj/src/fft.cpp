#include "silink/fft.h"

#include <cmath>
#include <cstddef>

namespace silink {

namespace {

using cd = std::complex<double>;

bool is_pow2(size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// In-place iterative radix-2 Cooley-Tukey; n must be a power of two.
void fft_pow2(std::vector<cd> &x, bool inverse) {
	size_t n = x.size();
	for (size_t i = 1, j = 0; i < n; ++i) {
		size_t bit = n >> 1;
		for (; j & bit; bit >>= 1)
			j ^= bit;
		j ^= bit;
		if (i < j)
			std::swap(x[i], x[j]);
	}
	for (size_t len = 2; len <= n; len <<= 1) {
		double ang = (inverse ? 2.0 : -2.0) * M_PI / static_cast<double>(len);
		cd wl(std::cos(ang), std::sin(ang));
		for (size_t i = 0; i < n; i += len) {
			cd w(1.0, 0.0);
			for (size_t j = 0; j < len / 2; ++j) {
				cd u = x[i + j];
				cd v = x[i + j + len / 2] * w;
				x[i + j] = u + v;
				x[i + j + len / 2] = u - v;
				w *= wl;
			}
		}
	}
}

// Bluestein chirp-z transform: forward DFT of arbitrary length via a
// power-of-two convolution.
std::vector<cd> bluestein(const std::vector<cd> &x) {
	size_t n = x.size();
	size_t m = 1;
	while (m < 2 * n - 1)
		m <<= 1;

	// chirp w[k] = exp(-i*pi*k^2/n); reduce k^2 mod 2n to keep angles small
	std::vector<cd> w(n);
	for (size_t k = 0; k < n; ++k) {
		unsigned long long k2 =
		    (static_cast<unsigned long long>(k) * k) % (2ull * n);
		double ang = -M_PI * static_cast<double>(k2) / static_cast<double>(n);
		w[k] = cd(std::cos(ang), std::sin(ang));
	}

	std::vector<cd> a(m, cd(0.0, 0.0)), b(m, cd(0.0, 0.0));
	for (size_t k = 0; k < n; ++k)
		a[k] = x[k] * w[k];
	b[0] = std::conj(w[0]);
	for (size_t k = 1; k < n; ++k)
		b[k] = b[m - k] = std::conj(w[k]);

	fft_pow2(a, false);
	fft_pow2(b, false);
	for (size_t k = 0; k < m; ++k)
		a[k] *= b[k];
	fft_pow2(a, true);
	double scale = 1.0 / static_cast<double>(m);

	std::vector<cd> out(n);
	for (size_t k = 0; k < n; ++k)
		out[k] = a[k] * scale * w[k];
	return out;
}

} // namespace

std::vector<cd> fft(std::vector<cd> x) {
	if (x.size() <= 1)
		return x;
	if (is_pow2(x.size())) {
		fft_pow2(x, false);
		return x;
	}
	return bluestein(x);
}

std::vector<cd> ifft(std::vector<cd> x) {
	size_t n = x.size();
	if (n == 0)
		return x;
	if (is_pow2(n)) {
		fft_pow2(x, true);
	} else {
		// ifft(x) = conj(fft(conj(x))) / n
		for (auto &v : x)
			v = std::conj(v);
		x = bluestein(x);
		for (auto &v : x)
			v = std::conj(v);
	}
	double scale = 1.0 / static_cast<double>(n);
	for (auto &v : x)
		v *= scale;
	return x;
}

} // namespace silink
