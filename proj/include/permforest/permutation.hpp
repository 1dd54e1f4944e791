#ifndef PERMFOREST_PERMUTATION_HPP
#define PERMFOREST_PERMUTATION_HPP

#include <string>
#include <vector>

namespace permforest {

// A permutation of {1..n} in one-line notation. All interfaces are 1-based;
// the empty permutation is rejected at construction.
class Permutation {
public:
    explicit Permutation(std::vector<int> values);

    int size() const { return static_cast<int>(vals_.size()); }

    // Value at 1-based position i.
    int operator()(int i) const { return vals_[static_cast<size_t>(i) - 1]; }

    const std::vector<int>& values() const { return vals_; }

    bool operator==(const Permutation& o) const { return vals_ == o.vals_; }
    bool operator!=(const Permutation& o) const { return vals_ != o.vals_; }

private:
    std::vector<int> vals_;
};

Permutation make_permutation(const std::vector<int>& values);

// Accepts "6 4 3 7 5 1 8 2", "6,4,3,7,5,1,8,2" and, for n <= 9, the compact
// digit string "64375182".
Permutation parse_permutation(const std::string& text);

std::string to_string(const Permutation& p);

// Positions i such that p(i) is a right-to-left minimum, ascending.
std::vector<int> rl_minima(const Permutation& p);

// Length of the maximal increasing suffix; always >= 1.
int final_ascent(const Permutation& p);

Permutation inverse(const Permutation& p);

bool is_increasing(const Permutation& p);

Permutation identity_permutation(int n);

}  // namespace permforest

#endif
