#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cellmap/errors.hpp"
#include "cellmap/perm.hpp"

namespace cellmap {

// A perfect matching on the plain half-edges {1..2n}, as (a,b) pairs.
using Matching = std::vector<std::pair<int, int>>;

enum class MapClass { I, II, III, BI, BII };
const char* to_string(MapClass c);

// A planted unicellular map with n non-plant edges: half-edges {L,1..2n,R},
// alpha a fixed-point-free involution pairing (L,R), and the single face
// compose(alpha, sigma) equal to the canonical cycle (L,1,...,2n,R). Maps are always
// stored in canonical labeling, so equality is plain structural equality.
class UnicellularMap {
public:
    int edges() const { return n_; }
    const Permutation& alpha() const { return alpha_; }
    const Permutation& sigma() const { return sigma_; }
    const LabelSet& labels() const { return alpha_.labels(); }

    // The face gamma = compose(alpha, sigma) (always the canonical cycle).
    Permutation face() const { return compose(alpha_, sigma_); }

    // The non-plant pairs of alpha, each as (a,b) with a<b, sorted by a.
    Matching pairing() const;

    int vertex_count() const { return sigma_.cycle_count(); }  // plant included

    friend bool operator==(const UnicellularMap&, const UnicellularMap&) = default;

private:
    UnicellularMap(int n, Permutation alpha, Permutation sigma)
        : n_(n), alpha_(std::move(alpha)), sigma_(std::move(sigma)) {}
    friend UnicellularMap validate_unicellular(const Permutation&, const Permutation&);

    int n_;
    Permutation alpha_;
    Permutation sigma_;
};

// A planted bicellular map with n non-rainbow edges and split index m:
// half-edges {L1,1..m,R1,L2,m+1..2n,R2}, beta pairing (L1,R1) and (L2,R2),
// and compose(beta, tau) equal to the two canonical face cycles.
class BicellularMap {
public:
    int edges() const { return n_; }
    int split() const { return m_; }
    const Permutation& beta() const { return beta_; }
    const Permutation& tau() const { return tau_; }
    const LabelSet& labels() const { return beta_.labels(); }

    // The two faces omega1*omega2 = compose(beta, tau) as one permutation.
    Permutation faces() const { return compose(beta_, tau_); }

    Matching pairing() const;

    int vertex_count() const { return tau_.cycle_count() - 2; }  // plants excluded

    friend bool operator==(const BicellularMap&, const BicellularMap&) = default;

private:
    BicellularMap(int n, int m, Permutation beta, Permutation tau)
        : n_(n), m_(m), beta_(std::move(beta)), tau_(std::move(tau)) {}
    friend BicellularMap validate_bicellular(const Permutation&, const Permutation&);

    int n_;
    int m_;
    Permutation beta_;
    Permutation tau_;
};

// The canonical face permutation of a unicellular or bicellular label set:
// the ambient successor within each face block.
Permutation canonical_face(const LabelSet& set);

// Builds the map with alpha = pairing plus (L,R); sigma is forced to
// compose(alpha, gamma) by the canonical face. n may be 0 (the plant-only map).
UnicellularMap make_unicellular(int n, const Matching& pairing);

// Checks every invariant and returns the map; reports the first violation
// (non-involution, fixed point, missing plant pair, non-canonical face)
// as a ValidationError.
UnicellularMap validate_unicellular(const Permutation& alpha, const Permutation& sigma);

BicellularMap make_bicellular(int n, int m, const Matching& pairing);
BicellularMap validate_bicellular(const Permutation& beta, const Permutation& tau);

// Euler genus: 2-2g = (V-1) - n + 1 with V the
// sigma-cycle count including the plant.
int genus_unicellular(const UnicellularMap& u);

// 2-2g = V - n + 2 with V the tau-cycle count excluding the two plants.
int genus_bicellular(const BicellularMap& b);

// The I/II/III partition: whether half-edges 1 and alpha(1) share a vertex,
// and whether some plain k with 1 < k < alpha(1) has alpha(k) > alpha(1).
// Undefined (DomainError) for the plant-only map.
MapClass classify_unicellular(const UnicellularMap& u);

// BI iff the two plants hang off different vertices, i.e. the vertex of L1
// differs from the vertex of L2.
MapClass classify_bicellular(const BicellularMap& b);

namespace detail {

template <class T>
std::map<T, int> face_positions(const std::vector<T>& face) {
    std::map<T, int> pos;
    for (size_t i = 0; i < face.size(); ++i)
        if (!pos.emplace(face[i], static_cast<int>(i)).second)
            throw ValidationError("face visits a label twice");
    return pos;
}

}  // namespace detail

// Order-preserving rename of an explicit face traversal onto the canonical
// label set. `face` lists the labels in face order (front and back are the
// rainbow ends); `pairing` is the edge involution on those labels and must
// contain the rainbow pair (front,back). Works for any ordered label-like
// token type, so callers can tag labels from several source maps.
template <class T>
UnicellularMap canonical_relabel_unicellular(const std::vector<T>& face,
                                             const std::vector<std::pair<T, T>>& pairing) {
    const int k = static_cast<int>(face.size());
    if (k < 2 || k % 2 != 0)
        throw ValidationError("face length must be even and at least 2");
    if (pairing.size() * 2 != face.size())
        throw ValidationError("pairing does not cover the face exactly");
    auto pos = detail::face_positions(face);
    Matching plain_pairs;
    std::vector<char> used(static_cast<size_t>(k), 0);
    bool saw_rainbow = false;
    for (const auto& [a, b] : pairing) {
        auto ia = pos.find(a);
        auto ib = pos.find(b);
        if (ia == pos.end() || ib == pos.end())
            throw ValidationError("pairing mentions a label not on the face");
        int pa = ia->second, pb = ib->second;
        if (pa == pb) throw ValidationError("pairing contains a fixed point");
        if (used[static_cast<size_t>(pa)] || used[static_cast<size_t>(pb)])
            throw ValidationError("pairing reuses a label");
        used[static_cast<size_t>(pa)] = used[static_cast<size_t>(pb)] = 1;
        if (pa > pb) std::swap(pa, pb);
        if (pa == 0 || pb == k - 1) {
            if (pa != 0 || pb != k - 1)
                throw ValidationError("rainbow ends are not paired with each other");
            saw_rainbow = true;
        } else {
            // interior face positions are exactly the canonical plain labels
            plain_pairs.emplace_back(pa, pb);
        }
    }
    if (!saw_rainbow) throw ValidationError("pairing lacks the rainbow pair");
    return make_unicellular((k - 2) / 2, plain_pairs);
}

// Bicellular flavor: two face traversals with designated rainbow ends at
// front/back of each. The split index is face1.size()-2.
template <class T>
BicellularMap canonical_relabel_bicellular(const std::vector<T>& face1,
                                           const std::vector<T>& face2,
                                           const std::vector<std::pair<T, T>>& pairing) {
    const int k1 = static_cast<int>(face1.size());
    const int k2 = static_cast<int>(face2.size());
    if (k1 < 3 || k2 < 3)
        throw ValidationError("each face needs at least one non-rainbow label");
    if ((k1 + k2) % 2 != 0) throw ValidationError("faces have an odd label count");
    if (pairing.size() * 2 != face1.size() + face2.size())
        throw ValidationError("pairing does not cover the faces exactly");
    const int m = k1 - 2;
    const int n = (k1 + k2 - 4) / 2;
    std::vector<T> all(face1);
    all.insert(all.end(), face2.begin(), face2.end());
    auto pos = detail::face_positions(all);
    // Composite position -> canonical plain label (0 marks a rainbow end).
    auto plain_of = [&](int p) {
        if (p == 0 || p == k1 - 1 || p == k1 || p == k1 + k2 - 1) return 0;
        return p < k1 ? p : m + (p - k1);
    };
    Matching plain_pairs;
    std::vector<char> used(static_cast<size_t>(k1 + k2), 0);
    bool saw_rainbow1 = false, saw_rainbow2 = false;
    for (const auto& [a, b] : pairing) {
        auto ia = pos.find(a);
        auto ib = pos.find(b);
        if (ia == pos.end() || ib == pos.end())
            throw ValidationError("pairing mentions a label not on the faces");
        int pa = ia->second, pb = ib->second;
        if (pa == pb) throw ValidationError("pairing contains a fixed point");
        if (used[static_cast<size_t>(pa)] || used[static_cast<size_t>(pb)])
            throw ValidationError("pairing reuses a label");
        used[static_cast<size_t>(pa)] = used[static_cast<size_t>(pb)] = 1;
        if (pa > pb) std::swap(pa, pb);
        int la = plain_of(pa), lb = plain_of(pb);
        if (la == 0 || lb == 0) {
            if (pa == 0 && pb == k1 - 1)
                saw_rainbow1 = true;
            else if (pa == k1 && pb == k1 + k2 - 1)
                saw_rainbow2 = true;
            else
                throw ValidationError("rainbow ends are not paired with each other");
        } else {
            plain_pairs.emplace_back(la, lb);
        }
    }
    if (!saw_rainbow1 || !saw_rainbow2)
        throw ValidationError("pairing lacks a rainbow pair");
    return make_bicellular(n, m, plain_pairs);
}

}  // namespace cellmap
