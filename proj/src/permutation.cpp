#include "permforest/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace permforest {

Permutation::Permutation(std::vector<int> values) : vals_(std::move(values)) {
    const int n = static_cast<int>(vals_.size());
    if (n == 0)
        throw std::invalid_argument("permutation must be nonempty");
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    for (int v : vals_) {
        if (v < 1 || v > n)
            throw std::invalid_argument("permutation value out of range 1..n: " +
                                        std::to_string(v));
        if (seen[static_cast<size_t>(v)])
            throw std::invalid_argument("repeated permutation value: " + std::to_string(v));
        seen[static_cast<size_t>(v)] = 1;
    }
}

Permutation make_permutation(const std::vector<int>& values) {
    return Permutation(values);
}

Permutation parse_permutation(const std::string& text) {
    std::string s = text;
    std::replace(s.begin(), s.end(), ',', ' ');
    std::istringstream in(s);
    std::vector<std::string> tokens;
    for (std::string tok; in >> tok;) tokens.push_back(tok);
    if (tokens.empty())
        throw std::invalid_argument("empty permutation");

    std::vector<int> values;
    if (tokens.size() == 1 && tokens[0].size() > 1) {
        // Compact digit string; unambiguous only for n <= 9.
        for (char c : tokens[0]) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw std::invalid_argument("invalid permutation token: " + tokens[0]);
            values.push_back(c - '0');
        }
    } else {
        for (const std::string& tok : tokens) {
            size_t pos = 0;
            int v;
            try {
                v = std::stoi(tok, &pos);
            } catch (const std::exception&) {
                throw std::invalid_argument("invalid permutation token: " + tok);
            }
            if (pos != tok.size())
                throw std::invalid_argument("invalid permutation token: " + tok);
            values.push_back(v);
        }
    }
    return Permutation(values);
}

std::string to_string(const Permutation& p) {
    std::ostringstream out;
    for (int i = 1; i <= p.size(); ++i) {
        if (i > 1) out << ' ';
        out << p(i);
    }
    return out.str();
}

std::vector<int> rl_minima(const Permutation& p) {
    std::vector<int> pos;
    int low = p.size() + 1;
    for (int i = p.size(); i >= 1; --i) {
        if (p(i) < low) {
            low = p(i);
            pos.push_back(i);
        }
    }
    std::reverse(pos.begin(), pos.end());
    return pos;
}

int final_ascent(const Permutation& p) {
    const int n = p.size();
    int a = 1;
    while (a < n && p(n - a) < p(n - a + 1)) ++a;
    return a;
}

Permutation inverse(const Permutation& p) {
    std::vector<int> inv(static_cast<size_t>(p.size()));
    for (int i = 1; i <= p.size(); ++i) inv[static_cast<size_t>(p(i)) - 1] = i;
    return Permutation(inv);
}

bool is_increasing(const Permutation& p) {
    for (int i = 1; i < p.size(); ++i)
        if (p(i) > p(i + 1)) return false;
    return true;
}

Permutation identity_permutation(int n) {
    std::vector<int> v(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = i + 1;
    return Permutation(v);
}

}  // namespace permforest
