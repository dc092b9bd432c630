// Graded bundle bookkeeping: basis labels, Koszul signs, unshuffles, wedge words.
//
// Level i holds E_{-i}, whose elements have degree -i. Only the parity of a
// degree ever enters a sign.
#pragma once

#include "folia/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace folia {

class GradedBundle {
public:
    GradedBundle() = default;
    /// Labels default to e<level>_<index> (1-based index).
    explicit GradedBundle(std::vector<int> ranks);
    GradedBundle(std::vector<int> ranks, std::vector<std::vector<std::string>> labels);

    int depth() const { return static_cast<int>(ranks_.size()); }
    int rank(int level) const { return level >= 0 && level < depth() ? ranks_[level] : 0; }
    const std::vector<int>& ranks() const { return ranks_; }
    const std::string& label(int level, int index) const { return labels_.at(level).at(index); }
    const std::vector<std::vector<std::string>>& labels() const { return labels_; }
    /// Finds (level, index) of a label.
    std::optional<std::pair<int, int>> find(const std::string& label) const;

private:
    std::vector<int> ranks_;
    std::vector<std::vector<std::string>> labels_;
};

/// A constant basis element e^{(level)}_{index}.
struct BasisRef {
    int level = 0;
    int index = 0;
    int degree() const { return -level; }
    friend auto operator<=>(const BasisRef&, const BasisRef&) = default;
};

/// Sign of the permutation sigma (sigma[k] = source position of the k-th
/// output) acting on homogeneous elements of the given degrees in the graded
/// exterior algebra: a_{sigma(1)} ^ ... ^ a_{sigma(k)} = sign * a_1 ^ ... ^ a_k,
/// where swapping adjacent a, b costs -(-1)^{|a||b|}.
int koszul_sign(const std::vector<int>& sigma, const std::vector<int>& degrees);

struct Unshuffle {
    std::vector<int> first;   // ascending, 0-based positions
    std::vector<int> second;  // ascending complement
    /// Concatenation first ++ second as a permutation.
    std::vector<int> permutation() const;
};

/// All (j, k-j)-unshuffles of {0..k-1}, first blocks in lexicographic order.
std::vector<Unshuffle> unshuffles(int j, int k);

/// A signed wedge of basis elements; canonical form sorts (level, index) ascending.
struct WedgeWord {
    int sign = 1;  // 0 means the word vanished
    std::vector<BasisRef> factors;

    bool is_zero() const { return sign == 0; }
};

/// Sort factors, accumulating the Koszul sign; repeated factors of even
/// degree (which anticommute with themselves) make the word zero.
WedgeWord canonicalize(WedgeWord w);
/// Concatenate then canonicalize.
WedgeWord wedge(const std::vector<WedgeWord>& words);

}  // namespace folia
