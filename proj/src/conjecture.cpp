#include "tropcrit/errors.hpp"
#include "tropcrit/sections.hpp"
#include "tropcrit/tropsolve.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <thread>

namespace tropcrit {

std::vector<DominantWeight> integral_weights(int n, int bound) {
    std::vector<DominantWeight> out;
    std::vector<long> m(static_cast<std::size_t>(n - 1), 0);
    while (true) {
        auto lam = DominantWeight::from_fundamental(n, m);
        if (is_integral(lam)) out.push_back(lam);
        std::size_t k = 0;
        while (k < m.size() && m[k] == bound) m[k++] = 0;
        if (k == m.size()) break;
        ++m[k];
    }
    return out;
}

SweepResult conjecture_sweep(int n, int bound, const std::vector<ReducedWord>& words, unsigned threads) {
    SweepResult res;
    for (const auto& lam : integral_weights(n, bound))
        for (const auto& w : words) res.cases.push_back({lam, w, std::nullopt, {}, {}});

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < res.cases.size();) {
            auto& c = res.cases[i];
            try {
                c.report = conjecture_check(c.lambda, c.word);
            } catch (const Error& e) {
                c.error_code = e.code();
                c.error = e.what();
            }
        }
    };
    std::vector<std::future<void>> pool;
    for (unsigned t = 0; t < threads; ++t) pool.push_back(std::async(std::launch::async, worker));
    for (auto& f : pool) f.get();

    std::sort(res.cases.begin(), res.cases.end(), [](const SweepCase& a, const SweepCase& b) {
        auto la = a.lambda.canonical().lift(), lb = b.lambda.canonical().lift();
        return la != lb ? la < lb : a.word < b.word;
    });
    for (const auto& c : res.cases) {
        if (!c.report) ++res.unsupported;
        else if (c.report->equal) ++res.equal;
        else ++res.unequal;
    }
    return res;
}

} // namespace tropcrit
