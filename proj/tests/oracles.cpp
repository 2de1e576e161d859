#include "oracles.hpp"

#include <algorithm>
#include <functional>

namespace oracle {

long long gt_count(const std::vector<long>& lambda) {
    if (lambda.size() <= 1) return 1;
    long long total = 0;
    std::vector<long> row(lambda.size() - 1);
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == row.size()) {
            total += gt_count(row);
            return;
        }
        for (long x = lambda[k + 1]; x <= lambda[k]; ++x) {
            row[k] = x;
            rec(k + 1);
        }
    };
    rec(0);
    return total;
}

std::vector<std::vector<int>> reduced_words_brute(int n) {
    const int N = n * (n - 1) / 2;
    std::vector<std::vector<int>> out;
    std::vector<int> w(static_cast<std::size_t>(N), 1);
    while (true) {
        std::vector<int> p(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) p[static_cast<std::size_t>(k)] = k;
        for (int i : w) std::swap(p[static_cast<std::size_t>(i - 1)], p[static_cast<std::size_t>(i)]);
        bool rev = true;
        for (int k = 0; k < n; ++k) rev = rev && p[static_cast<std::size_t>(k)] == n - 1 - k;
        if (rev) out.push_back(w);
        int pos = N - 1;
        while (pos >= 0 && w[static_cast<std::size_t>(pos)] == n - 1) w[static_cast<std::size_t>(pos--)] = 1;
        if (pos < 0) break;
        ++w[static_cast<std::size_t>(pos)];
    }
    return out;
}

int grid_solutions_n3(const std::vector<tropcrit::Rational>& lambda, int M) {
    using tropcrit::Rational;
    // vertices: s1=v11, s2=v22, s3=v33 fixed; bullets p=v21, r=v31, s=v32
    // arrows (tail -> head): a: v21->v11, b: v31->v21, c: v22->v21, d: v32->v22, e: v32->v31, f: v33->v32
    long lo = (lambda[2] * Rational(M)).floor().get_si();
    long hi = (lambda[0] * Rational(M)).ceil().get_si();
    const Rational s1 = lambda[0], s2 = lambda[1], s3 = lambda[2];
    int count = 0;
    for (long P = lo; P <= hi; ++P)
        for (long R = lo; R <= hi; ++R)
            for (long S = lo; S <= hi; ++S) {
                Rational p(P, M), r(R, M), s(S, M);
                Rational a = s1 - p, b = p - r, c = p - s2, d = s2 - s, e = r - s, f = s - s3;
                bool ok = std::min(b, c) == a && e == b && std::min(d, e) == f;
                if (ok) ++count;
            }
    return count;
}

} // namespace oracle
