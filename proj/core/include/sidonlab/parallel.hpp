#ifndef SIDONLAB_PARALLEL_HPP
#define SIDONLAB_PARALLEL_HPP

#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace sidonlab {

inline unsigned effective_jobs(unsigned requested) { return requested == 0 ? 1 : requested; }

// Runs fn(branch) for every branch index and returns the results in branch
// order. Branches are claimed through an atomic counter, so the work
// distribution varies but the combined result never does.
template <class R>
std::vector<R> map_branches(std::size_t branches, unsigned jobs,
                            const std::function<R(std::size_t)>& fn) {
    std::vector<R> results(branches);
    jobs = effective_jobs(jobs);
    if (jobs == 1 || branches <= 1) {
        for (std::size_t b = 0; b < branches; ++b) results[b] = fn(b);
        return results;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        while (true) {
            std::size_t b = next.fetch_add(1);
            if (b >= branches) return;
            results[b] = fn(b);
        }
    };
    std::vector<std::thread> pool;
    const unsigned count = static_cast<unsigned>(std::min<std::size_t>(jobs, branches));
    pool.reserve(count);
    for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return results;
}

// First-success search over ordered branches. fn(branch, cutoff) returns
// true when the branch found a result; cutoff tells running branches the
// lowest successful branch so far, letting higher branches abort early.
// Branches below the eventual winner always run to completion, so the
// winner is the least successful branch regardless of scheduling.
inline std::size_t find_first_branch(std::size_t branches, unsigned jobs,
                                     const std::function<bool(std::size_t,
                                                              const std::atomic<std::size_t>&)>& fn) {
    std::atomic<std::size_t> best{branches};
    jobs = effective_jobs(jobs);
    if (jobs == 1 || branches <= 1) {
        for (std::size_t b = 0; b < branches; ++b)
            if (fn(b, best)) return b;
        return branches;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        while (true) {
            std::size_t b = next.fetch_add(1);
            if (b >= branches) return;
            if (b > best.load()) continue;
            if (fn(b, best)) {
                std::size_t cur = best.load();
                while (b < cur && !best.compare_exchange_weak(cur, b)) {
                }
            }
        }
    };
    std::vector<std::thread> pool;
    const unsigned count = static_cast<unsigned>(std::min<std::size_t>(jobs, branches));
    pool.reserve(count);
    for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return best.load();
}

}  // namespace sidonlab

#endif
