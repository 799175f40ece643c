#pragma once

#include <vector>

#include "cellmap/label.hpp"

namespace cellmap {

// A permutation of a fixed finite label set, stored as an image table over
// the set's ambient indices. Values are immutable after construction.
class Permutation {
public:
    Permutation() : set_(LabelSet::plain_range(0)) {}

    static Permutation identity(const LabelSet& set);

    // images[i] is the ambient index of the image of the i-th label.
    // Throws ValidationError unless the table is a bijection.
    static Permutation from_images(LabelSet set, std::vector<int> images);

    // Builds a permutation from disjoint cycles; labels not mentioned in any
    // cycle are fixed points.
    static Permutation from_cycles(const LabelSet& set,
                                   const std::vector<std::vector<Label>>& cycles);

    const LabelSet& labels() const { return set_; }
    int size() const { return static_cast<int>(images_.size()); }

    int image(int index) const { return images_[static_cast<size_t>(index)]; }
    Label apply(const Label& label) const;

    Permutation inverse() const;

    // Cycle decomposition in canonical form: each cycle starts at its
    // ambient-minimal label and cycles are sorted by that minimum. Fixed
    // points appear as length-1 cycles.
    std::vector<std::vector<int>> cycle_indices() const;
    std::vector<std::vector<Label>> cycles() const;
    int cycle_count() const;

    bool is_identity() const;
    bool is_fpf_involution() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    Permutation(LabelSet set, std::vector<int> images)
        : set_(std::move(set)), images_(std::move(images)) {}

    LabelSet set_;
    std::vector<int> images_;
};

// r(x) = p(q(x)); right-to-left application, fixed project-wide.
// Throws ValidationError if p and q live on different label sets.
Permutation compose(const Permutation& p, const Permutation& q);

}  // namespace cellmap
