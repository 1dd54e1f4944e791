#include "permforest/decompose.hpp"

#include <algorithm>
#include <stdexcept>

#include "permforest/classify.hpp"
#include "permforest/graph.hpp"

namespace permforest {

namespace {

int position_of_one(const Permutation& p) {
    for (int i = 1; i <= p.size(); ++i)
        if (p(i) == 1) return i;
    return 0;
}

// Right-to-left rank of position pos among the rl-minima (rightmost = 1).
int rl_rank_from_right(const std::vector<int>& minima, int pos) {
    auto it = std::find(minima.begin(), minima.end(), pos);
    if (it == minima.end()) return 0;
    return static_cast<int>(minima.end() - it);
}

}  // namespace

DecompTriple phi(const Permutation& p) {
    const int n = p.size();
    if (!is_acyclic(build_graph(p)))
        throw std::invalid_argument("phi: permutation is not forest-like");
    const int i = position_of_one(p);
    if (i == n)
        throw std::invalid_argument("phi: 1 in last position is the base case");

    int h = p(i + 1);
    for (int j = 1; j < i; ++j) h = std::min(h, p(j));

    // tau = 1 followed by the trailing h-2 entries (the values 2..h-1).
    std::vector<int> tau_vals{1};
    for (int j = n - h + 3; j <= n; ++j) tau_vals.push_back(p(j));

    std::vector<int> sigma_vals;
    for (int j = 1; j <= n - h + 2; ++j) {
        if (j == i) continue;
        sigma_vals.push_back(p(j) - (h - 1));
    }

    Permutation tau(tau_vals);    // validates that the tail is exactly {2..h-1}
    Permutation sigma(sigma_vals);

    const int k = rl_rank_from_right(rl_minima(sigma), i);
    if (k == 0)
        throw std::invalid_argument("phi: entry after the 1 is not an rl-minimum");
    return DecompTriple{std::move(tau), std::move(sigma), k};
}

Permutation phi_inverse(const DecompTriple& t) {
    if (t.tau(1) != 1)
        throw std::invalid_argument("phi_inverse: tau is not rooted");
    {
        const PermGraph gt = build_graph(t.tau);
        if (!is_acyclic(gt) || static_cast<int>(gt.edges.size()) != t.tau.size() - 1 ||
            !is_connected(gt))
            throw std::invalid_argument("phi_inverse: tau is not tree-like");
        if (!is_acyclic(build_graph(t.sigma)))
            throw std::invalid_argument("phi_inverse: sigma is not forest-like");
    }
    const auto minima = rl_minima(t.sigma);
    if (t.k < 1 || t.k > static_cast<int>(minima.size()))
        throw std::invalid_argument("phi_inverse: k out of range");
    const int i = minima[minima.size() - static_cast<size_t>(t.k)];
    const int h = t.tau.size() + 1;

    std::vector<int> vals;
    vals.reserve(static_cast<size_t>(t.tau.size() + t.sigma.size()));
    for (int j = 1; j < i; ++j) vals.push_back(t.sigma(j) + h - 1);
    vals.push_back(1);
    for (int j = i; j <= t.sigma.size(); ++j) vals.push_back(t.sigma(j) + h - 1);
    for (int j = 2; j <= t.tau.size(); ++j) vals.push_back(t.tau(j));
    return Permutation(vals);
}

Permutation drop_trailing_one(const Permutation& p) {
    const int n = p.size();
    if (n < 2 || p(n) != 1)
        throw std::invalid_argument("drop_trailing_one: needs n >= 2 and p(n) = 1");
    std::vector<int> vals;
    vals.reserve(static_cast<size_t>(n) - 1);
    for (int j = 1; j < n; ++j) vals.push_back(p(j) - 1);
    return Permutation(vals);
}

Permutation add_trailing_one(const Permutation& p) {
    std::vector<int> vals;
    vals.reserve(static_cast<size_t>(p.size()) + 1);
    for (int j = 1; j <= p.size(); ++j) vals.push_back(p(j) + 1);
    vals.push_back(1);
    return Permutation(vals);
}

StatisticsRecord statistics_check(const Permutation& p, const DecompTriple& t) {
    StatisticsRecord rec;
    const bool tau_trivial = t.tau.size() == 1;

    const auto sigma_minima = rl_minima(t.sigma);
    const int m_sigma = static_cast<int>(sigma_minima.size());
    const int a_sigma = final_ascent(t.sigma);
    const int i = sigma_minima[sigma_minima.size() - static_cast<size_t>(t.k)];

    rec.m_pi = static_cast<int>(rl_minima(p).size());
    rec.m_expected = tau_trivial ? t.k + 1 : static_cast<int>(rl_minima(t.tau).size());
    rec.m_consistent = rec.m_pi == rec.m_expected;

    const ClassReport rp = classify(p);
    const ClassReport rs = classify(t.sigma);

    rec.tree_transfer = rp.tree_like == rs.tree_like;
    rec.rooted_transfer = rp.rooted_tree_like == (rs.rooted_tree_like && t.k == m_sigma);

    const int deg_i = build_graph(t.sigma).degrees()[static_cast<size_t>(i)];
    const bool endpoint = t.sigma.size() == 1 || deg_i == 1;
    rec.path_transfer =
        rp.path_like == (is_increasing(t.tau) && rs.path_like && endpoint);

    rec.smooth_transfer = rp.smooth == (rs.smooth && (t.k == m_sigma || t.k <= a_sigma));

    rec.a_applicable = rp.smooth;
    if (rec.a_applicable) {
        rec.a_pi = final_ascent(p);
        if (tau_trivial && t.k <= a_sigma)
            rec.a_expected = t.k + 1;
        else if (tau_trivial && t.k == m_sigma)
            rec.a_expected = a_sigma;
        else if (!tau_trivial && is_increasing(t.tau))
            rec.a_expected = final_ascent(t.tau) - 1;
        else if (!tau_trivial)
            rec.a_expected = final_ascent(t.tau);
        else
            rec.a_expected = -1;  // no clause applies; impossible for smooth p
        rec.a_consistent = rec.a_pi == rec.a_expected;
    }
    return rec;
}

}  // namespace permforest
