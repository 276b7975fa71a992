#ifndef SSQW_DETAIL_PARALLEL_HPP
#define SSQW_DETAIL_PARALLEL_HPP

#include <atomic>
#include <exception>
#include <thread>
#include <vector>

namespace ssqw::detail {

// Order-independent parallel loop; the first worker exception is rethrown after join.
template <class F>
void parallel_for(int n, unsigned threads, F&& fn) {
    if (n <= 0) return;
    unsigned t = threads != 0 ? threads : std::thread::hardware_concurrency();
    t = std::max(1u, std::min<unsigned>(t, static_cast<unsigned>(n)));
    if (t == 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr error;
    std::atomic<bool> failed{false};
    std::vector<std::thread> pool;
    pool.reserve(t);
    for (unsigned k = 0; k < t; ++k)
        pool.emplace_back([&] {
            try {
                for (int i; (i = next.fetch_add(1)) < n;) {
                    if (failed.load()) return;
                    fn(i);
                }
            } catch (...) {
                if (!failed.exchange(true)) error = std::current_exception();
            }
        });
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace ssqw::detail

#endif
