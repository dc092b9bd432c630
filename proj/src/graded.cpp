#include "folia/graded.hpp"

#include <algorithm>
#include <stdexcept>

namespace folia {

GradedBundle::GradedBundle(std::vector<int> ranks) : ranks_(std::move(ranks)) {
    for (int level = 0; level < depth(); ++level) {
        std::vector<std::string> names;
        for (int i = 0; i < ranks_[level]; ++i)
            names.push_back("e" + std::to_string(level) + "_" + std::to_string(i + 1));
        labels_.push_back(std::move(names));
    }
    *this = GradedBundle(ranks_, labels_);
}

GradedBundle::GradedBundle(std::vector<int> ranks, std::vector<std::vector<std::string>> labels)
    : ranks_(std::move(ranks)), labels_(std::move(labels)) {
    if (ranks_.empty()) throw std::invalid_argument("graded bundle needs depth >= 1");
    if (labels_.size() != ranks_.size()) throw std::invalid_argument("one label list per level required");
    for (int level = 0; level < depth(); ++level) {
        if (ranks_[level] <= 0) throw std::invalid_argument("bundle ranks must be positive");
        if (static_cast<int>(labels_[level].size()) != ranks_[level])
            throw std::invalid_argument("label count differs from rank at level " + std::to_string(level));
    }
    for (int a = 0; a < depth(); ++a)
        for (std::size_t i = 0; i < labels_[a].size(); ++i)
            for (int b = a; b < depth(); ++b)
                for (std::size_t j = (a == b ? i + 1 : 0); j < labels_[b].size(); ++j)
                    if (labels_[a][i] == labels_[b][j])
                        throw std::invalid_argument("duplicate basis label '" + labels_[a][i] + "'");
}

std::optional<std::pair<int, int>> GradedBundle::find(const std::string& label) const {
    for (int level = 0; level < depth(); ++level)
        for (int i = 0; i < ranks_[level]; ++i)
            if (labels_[level][i] == label) return std::make_pair(level, i);
    return std::nullopt;
}

int koszul_sign(const std::vector<int>& sigma, const std::vector<int>& degrees) {
    if (sigma.size() != degrees.size()) throw std::invalid_argument("permutation and degree list lengths differ");
    // Sort the word a_{sigma(0)}, ..., a_{sigma(k-1)} back to natural order by
    // adjacent transpositions, multiplying the cost of each swap.
    std::vector<int> word = sigma;
    int sign = 1;
    for (std::size_t i = 0; i < word.size(); ++i)
        for (std::size_t j = 0; j + 1 < word.size() - i; ++j)
            if (word[j] > word[j + 1]) {
                const int da = degrees.at(word[j]), db = degrees.at(word[j + 1]);
                if (((da * db) & 1) == 0) sign = -sign;
                std::swap(word[j], word[j + 1]);
            }
    return sign;
}

std::vector<int> Unshuffle::permutation() const {
    std::vector<int> p = first;
    p.insert(p.end(), second.begin(), second.end());
    return p;
}

std::vector<Unshuffle> unshuffles(int j, int k) {
    if (j < 0 || j > k) throw std::invalid_argument("unshuffles need 0 <= j <= k");
    std::vector<Unshuffle> out;
    std::vector<bool> pick(static_cast<std::size_t>(k), false);
    std::fill(pick.begin(), pick.begin() + j, true);
    // prev_permutation over a descending-sorted mask yields lexicographic first blocks.
    do {
        Unshuffle u;
        for (int i = 0; i < k; ++i) (pick[i] ? u.first : u.second).push_back(i);
        out.push_back(std::move(u));
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return out;
}

WedgeWord canonicalize(WedgeWord w) {
    if (w.sign == 0) return w;
    auto& f = w.factors;
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j + 1 < f.size() - i; ++j)
            if (f[j + 1] < f[j]) {
                if (((f[j].degree() * f[j + 1].degree()) & 1) == 0) w.sign = -w.sign;
                std::swap(f[j], f[j + 1]);
            }
    for (std::size_t j = 0; j + 1 < f.size(); ++j)
        if (f[j] == f[j + 1] && (f[j].degree() & 1) == 0) {
            w.sign = 0;
            f.clear();
            break;
        }
    return w;
}

WedgeWord wedge(const std::vector<WedgeWord>& words) {
    WedgeWord out;
    for (const auto& w : words) {
        if (w.is_zero()) return WedgeWord{0, {}};
        out.sign *= w.sign;
        out.factors.insert(out.factors.end(), w.factors.begin(), w.factors.end());
    }
    return canonicalize(std::move(out));
}

}  // namespace folia
