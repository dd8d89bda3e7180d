#ifndef DEGSEQ_TESTER_HPP
#define DEGSEQ_TESTER_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "degseq/degree_seq.hpp"
#include "degseq/oracle.hpp"

namespace degseq {

enum class Decision { Yes, No };

/// A permutation-closed set of realizable sequences, given by exact
/// membership on canonical (sorted non-decreasing) sequences and an optional
/// gap decision procedure:
///   Yes whenever some n-term d* in the set has multiset_l1(d(n,alpha), d*) <= delta,
///   No whenever every d* has distance > 2*delta, either answer in between.
struct DegreeSequenceProperty {
    std::string name;
    std::function<bool(const std::vector<int>&)> exact_membership;
    std::function<Decision(double, int, const DegreeStatistic&)> near_decision; // may be empty
};

struct TesterConfig {
    double epsilon = 0.1;
    double c_const = 10.0; // implied constant of the repair bound
    std::optional<double> delta_override;
    std::uint64_t seed = 0;
    int repeat = 1; // odd majority vote; plumbing, not an error-bound claim
};

struct TestOutcome {
    bool accept = false;
    std::uint64_t queries = 0;
    double delta = 0.0;
    bool fallback = false; // n < delta^-2: whole graph queried, exact verdict
};

/// delta = delta_override, or (1/3)(epsilon/c)^2. For n < delta^-2 queries all
/// n(n-1)/2 pairs and decides by exact membership; otherwise estimates a
/// degree statistic and delegates to the property's near_decision.
TestOutcome run_tester(GraphOracle& oracle, const DegreeSequenceProperty& property,
                       const TesterConfig& cfg);

/// min over r in {0..n-1} of multiset_l1(d(n,alpha), (r,...,r)); attained at a
/// weighted median of the bucket values.
double min_regular_distance(int n, const DegreeStatistic& stat);

/// Gap decision for "r-regular for some r = r(n)": Yes iff the minimum <= delta.
Decision regular_near_decision(double delta, int n, const DegreeStatistic& stat);

/// Linear scan: Yes iff some listed sequence is within delta. Empty list
/// decides No; entries must have length n.
Decision explicit_list_near_decision(const std::vector<std::vector<int>>& sequences,
                                     double delta, int n, const DegreeStatistic& stat);

// Bundled properties. Membership conjoins the shape predicate with the
// Erdos-Gallai check, so only realizable sequences belong.
DegreeSequenceProperty any_regular_property();
DegreeSequenceProperty fixed_regular_property(int r);
DegreeSequenceProperty fixed_regular_fraction_property(double fraction);
DegreeSequenceProperty max_degree_property(double fraction); // no near_decision
DegreeSequenceProperty explicit_list_property(std::vector<std::vector<int>> sequences);

/// Property spec JSON:
///   {"type":"any_regular"} | {"type":"fixed_regular","r":<int>} |
///   {"type":"fixed_regular","fraction":<real>} |
///   {"type":"max_degree","fraction":<real>} |
///   {"type":"explicit","sequences":[[...]]}
DegreeSequenceProperty property_from_json_text(const std::string& text);

} // namespace degseq

#endif
