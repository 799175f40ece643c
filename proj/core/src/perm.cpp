#include "cellmap/perm.hpp"

#include <numeric>

#include "cellmap/errors.hpp"

namespace cellmap {

Permutation Permutation::identity(const LabelSet& set) {
    std::vector<int> img(static_cast<size_t>(set.size()));
    std::iota(img.begin(), img.end(), 0);
    return Permutation(set, std::move(img));
}

Permutation Permutation::from_images(LabelSet set, std::vector<int> images) {
    const int k = set.size();
    if (static_cast<int>(images.size()) != k)
        throw ValidationError("image table size does not match the label set");
    std::vector<char> seen(static_cast<size_t>(k), 0);
    for (int v : images) {
        if (v < 0 || v >= k) throw ValidationError("image index out of range");
        if (seen[static_cast<size_t>(v)]) throw ValidationError("image table is not a bijection");
        seen[static_cast<size_t>(v)] = 1;
    }
    return Permutation(std::move(set), std::move(images));
}

Permutation Permutation::from_cycles(const LabelSet& set,
                                     const std::vector<std::vector<Label>>& cycles) {
    std::vector<int> img(static_cast<size_t>(set.size()));
    std::iota(img.begin(), img.end(), 0);
    std::vector<char> seen(img.size(), 0);
    for (const auto& cycle : cycles) {
        if (cycle.empty()) continue;
        std::vector<int> idx;
        idx.reserve(cycle.size());
        for (const Label& label : cycle) {
            int i = set.index_of(label);
            if (seen[static_cast<size_t>(i)])
                throw ValidationError("label " + to_string(label) +
                                      " appears in more than one cycle position");
            seen[static_cast<size_t>(i)] = 1;
            idx.push_back(i);
        }
        for (size_t p = 0; p < idx.size(); ++p)
            img[static_cast<size_t>(idx[p])] = idx[(p + 1) % idx.size()];
    }
    return Permutation(set, std::move(img));
}

Label Permutation::apply(const Label& label) const {
    return set_.at(images_[static_cast<size_t>(set_.index_of(label))]);
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (size_t i = 0; i < images_.size(); ++i)
        inv[static_cast<size_t>(images_[i])] = static_cast<int>(i);
    return Permutation(set_, std::move(inv));
}

std::vector<std::vector<int>> Permutation::cycle_indices() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(images_.size(), 0);
    for (int start = 0; start < size(); ++start) {
        if (seen[static_cast<size_t>(start)]) continue;
        std::vector<int> cycle;
        int cur = start;
        do {
            seen[static_cast<size_t>(cur)] = 1;
            cycle.push_back(cur);
            cur = images_[static_cast<size_t>(cur)];
        } while (cur != start);
        out.push_back(std::move(cycle));
    }
    return out;
}

std::vector<std::vector<Label>> Permutation::cycles() const {
    std::vector<std::vector<Label>> out;
    for (const auto& cycle : cycle_indices()) {
        std::vector<Label> labels;
        labels.reserve(cycle.size());
        for (int i : cycle) labels.push_back(set_.at(i));
        out.push_back(std::move(labels));
    }
    return out;
}

int Permutation::cycle_count() const {
    int count = 0;
    std::vector<char> seen(images_.size(), 0);
    for (int start = 0; start < size(); ++start) {
        if (seen[static_cast<size_t>(start)]) continue;
        ++count;
        int cur = start;
        do {
            seen[static_cast<size_t>(cur)] = 1;
            cur = images_[static_cast<size_t>(cur)];
        } while (cur != start);
    }
    return count;
}

bool Permutation::is_identity() const {
    for (int i = 0; i < size(); ++i)
        if (images_[static_cast<size_t>(i)] != i) return false;
    return true;
}

bool Permutation::is_fpf_involution() const {
    for (int i = 0; i < size(); ++i) {
        int j = images_[static_cast<size_t>(i)];
        if (j == i) return false;
        if (images_[static_cast<size_t>(j)] != i) return false;
    }
    return true;
}

Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.labels() != q.labels())
        throw ValidationError("cannot compose permutations on different label sets");
    std::vector<int> img(static_cast<size_t>(p.size()));
    for (int i = 0; i < p.size(); ++i) img[static_cast<size_t>(i)] = p.image(q.image(i));
    return Permutation::from_images(p.labels(), std::move(img));
}

}  // namespace cellmap
