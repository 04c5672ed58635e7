#pragma once

#include <atomic>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace blab {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

/// Worker cap for all internal pools. BLASCHKE_LAB_THREADS overrides the
/// hardware count; results never depend on the value.
inline int thread_budget() {
    if (const char* s = std::getenv("BLASCHKE_LAB_THREADS")) {
        const int v = std::atoi(s);
        if (v >= 1) return v > 256 ? 256 : v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

/// Runs body(i) for i in [0, count). Each index writes only its own slot, so
/// the result is schedule-independent; the first exception is rethrown.
template <typename F>
void parallel_for(int count, F&& body) {
    const int workers = std::min(thread_budget(), count);
    if (workers <= 1) {
        for (int i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<int> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr first_error;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::mutex err_mutex;
    for (int t = 0; t < workers; ++t) {
        pool.emplace_back([&] {
            for (int i; (i = next.fetch_add(1)) < count;) {
                if (failed.load(std::memory_order_relaxed)) break;
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(err_mutex);
                    if (!failed.exchange(true)) first_error = std::current_exception();
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

/// Splittable counter-based generator (splitmix64 finalizer). Streams derived
/// from (seed, stream) are independent and reproducible on any schedule.
class SplitRng {
public:
    explicit SplitRng(std::uint64_t seed, std::uint64_t stream = 0)
        : key_(mix(seed ^ 0x9e3779b97f4a7c15ull) ^ mix(stream + 0x243f6a8885a308d3ull)) {}

    SplitRng split(std::uint64_t stream) const { return SplitRng(key_, stream + 0x452821e638d01377ull); }

    std::uint64_t next_u64() { return mix(key_ + 0x9e3779b97f4a7c15ull * ++counter_); }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    double normal() {
        // Box-Muller, two fresh draws per call (no cached spare).
        const double u1 = uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log1p(-u1)) * std::cos(2.0 * kPi * u2);
    }

    cplx normal_complex() { return {normal(), normal()}; }

    cplx unit_complex() {
        const double t = 2.0 * kPi * uniform();
        return {std::cos(t), std::sin(t)};
    }

private:
    static std::uint64_t mix(std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ull;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
        return x ^ (x >> 31);
    }

    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

}  // namespace blab
