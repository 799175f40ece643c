#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cellmap/bijections.hpp"
#include "cellmap/maps.hpp"

namespace cellmap {

// Which split indices a bicellular enumeration ranges over. Inclusive is the
// shipped behavior (1 <= m <= 2n-1); StrictInterior (1 < m < 2n-1) exists
// only so the discriminating test can show the recursion fails with it.
enum class SplitRange { Inclusive, StrictInterior };

// Visits every perfect matching of {1..2n} exactly once, in lexicographic
// order (smallest free half-edge paired with each larger candidate in
// ascending order). n = 0 visits the empty matching once.
void for_each_matching(int n, const std::function<void(const Matching&)>& visit);

// Same, restricted to matchings whose first pair is (1, first_partner).
// These branches partition the search space for parallel workers.
void for_each_matching_with_first(int n, int first_partner,
                                  const std::function<void(const Matching&)>& visit);

void enumerate_unicellular(int n, std::optional<int> genus,
                           const std::function<void(const UnicellularMap&)>& visit);

void enumerate_bicellular(int n, std::optional<int> genus,
                          const std::function<void(const BicellularMap&)>& visit,
                          SplitRange range = SplitRange::Inclusive);

std::vector<UnicellularMap> all_unicellular(int n, std::optional<int> genus = std::nullopt);
std::vector<BicellularMap> all_bicellular(int n, std::optional<int> genus = std::nullopt);

// Exact counts c[g][n] = |U_{g,n}| and c2[g][n] = |B_{g,n}| up to max_n
// edges, from brute-force enumeration. 64-bit integers, no floating point.
struct CountTable {
    int max_n = 0;
    std::vector<std::vector<std::uint64_t>> uni;  // uni[g][n]
    std::vector<std::vector<std::uint64_t>> bi;   // bi[g][n]

    std::uint64_t unicellular_count(int g, int n) const;
    std::uint64_t bicellular_count(int g, int n) const;
};

CountTable count_table(int max_n, int workers = 1, SplitRange range = SplitRange::Inclusive);

// Delimited export, one line per in-range cell: "g n count kind" with kind
// uni or bi.
std::string format_count_table(const CountTable& table);

struct ReportCell {
    int g = 0;
    int n = 0;
    std::uint64_t lhs_pairs = 0;
    std::uint64_t lhs_bicellular = 0;
    std::uint64_t rhs = 0;
    bool pass = false;

    friend bool operator==(const ReportCell&, const ReportCell&) = default;
};

struct VerificationReport {
    std::string kind;  // "RECURSION" or "BIJECTION"
    std::vector<ReportCell> cells;
    bool pass = false;
};

// Human-readable cell lines plus the machine summary line
// "<KIND> PASS|FAIL cells=<k>".
std::string format_report(const VerificationReport& report);

// Checks sum_{g1,i} c_{g1}(i) c_{g+1-g1}(n-i) + c2_g(n) = c_{g+1}(n+1) for
// every cell with n+1 <= max_n and g+1 <= floor((n+1)/2), with both sides
// taken from brute-force tables.
VerificationReport verify_recursion(int max_n, int workers = 1,
                                    SplitRange range = SplitRange::Inclusive);

// Element-wise check of the decomposition on the cell U_{g,n}: both
// round-trip identities, the class partition tally, and that the forward
// images of all decompositions hit U_{g,n} exactly once each.
VerificationReport verify_bijection(int n, int g, int workers = 1);

}  // namespace cellmap
