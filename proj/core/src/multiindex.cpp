#include "homvar/multiindex.hpp"

namespace homvar {

namespace {

void enumerate_rec(int slots_left, int remaining, std::vector<int>& acc,
                   std::vector<MultiIndex>& out) {
    if (slots_left == 1) {
        acc.push_back(remaining);
        out.emplace_back(acc);
        acc.pop_back();
        return;
    }
    for (int c = remaining; c >= 0; --c) {
        acc.push_back(c);
        enumerate_rec(slots_left - 1, remaining - c, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<MultiIndex> enumerate_multiindices(int m, int p) {
    std::vector<MultiIndex> out;
    std::vector<int> acc;
    acc.reserve(static_cast<size_t>(m));
    enumerate_rec(m, p, acc, out);
    return out;
}

BigInt falling_weight(const MultiIndex& M, const MultiIndex& I) {
    BigInt r = 1;
    for (int s = 1; s <= M.dim(); ++s) {
        int top = M.at(s);
        int steps = I.at(s);
        for (int t = 0; t < steps; ++t) r *= (top - t);
    }
    return r;
}

}  // namespace homvar
