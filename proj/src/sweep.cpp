#include "silink/sweep.h"

#include <atomic>
#include <cstdlib>
#include <mutex>
#include <thread>
#include <vector>

namespace silink {

size_t thread_budget() {
	if (const char *s = std::getenv("SILINK_THREADS")) {
		char *end = nullptr;
		long v = std::strtol(s, &end, 10);
		if (end != s && *end == '\0' && v >= 1)
			return static_cast<size_t>(v);
	}
	unsigned hw = std::thread::hardware_concurrency();
	return hw ? hw : 1;
}

void parallel_for(size_t n, const std::function<void(size_t)> &fn) {
	size_t budget = thread_budget();
	if (budget > n)
		budget = n;
	if (budget <= 1) {
		for (size_t i = 0; i < n; ++i)
			fn(i);
		return;
	}

	std::atomic<size_t> next{0};
	std::exception_ptr first_error;
	std::mutex err_mutex;
	auto worker = [&]() {
		for (;;) {
			size_t i = next.fetch_add(1);
			if (i >= n)
				return;
			try {
				fn(i);
			} catch (...) {
				std::lock_guard<std::mutex> lock(err_mutex);
				if (!first_error)
					first_error = std::current_exception();
			}
		}
	};

	std::vector<std::thread> pool;
	pool.reserve(budget);
	for (size_t t = 0; t < budget; ++t)
		pool.emplace_back(worker);
	for (auto &th : pool)
		th.join();
	if (first_error)
		std::rethrow_exception(first_error);
}

} // namespace silink
