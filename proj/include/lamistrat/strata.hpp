#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lamistrat/lamination.hpp"
#include "lamistrat/multicurve.hpp"

namespace lamistrat {

class StrataPoset;
struct StrataOptions;

// The support of a rational lamination: a canonically sorted family of
// pairwise disjoint, pairwise non-isotopic connected curves.
class Support {
 public:
  // Throws NotConnected, NonDisjointComponents, InvalidInput (duplicates,
  // too many components, or empty unless `allow_empty`).
  Support(Frame frame, std::vector<Multicurve> components, bool allow_empty = false);

  // Components of a multicurve, multiplicities dropped.
  static Support of_multicurve(const Multicurve& m);

  const Frame& frame() const { return frame_; }
  const std::vector<Multicurve>& components() const { return components_; }
  int size() const { return static_cast<int>(components_.size()); }

  // Sum of the components with unit weights.
  Multicurve as_multicurve() const;

  friend bool operator==(const Support& a, const Support& b) {
    return same_frame(a.frame_, b.frame_) && a.components_ == b.components_;
  }
  // Canonical order: by component count, then lexicographic.
  friend bool operator<(const Support& a, const Support& b);

 private:
  struct Trusted {};
  Support(Frame frame, std::vector<Multicurve> components, Trusted);
  friend class StrataPoset;
  friend StrataPoset enumerate_strata(const Frame&, std::int64_t, StrataOptions);

  Frame frame_;
  std::vector<Multicurve> components_;
};

struct Stratum {
  Support support;
  int cone_dim = 0;  // number of components
  int depth = 0;     // cone_dim - 1 (or cone_dim when the empty stratum is adjoined)
};

// Throws EmptyLamination.
Support support_of(const RationalLamination& lam);

// Component count minus one.
int depth(const Support& s);

// s is below t: every component of s is a component of t. Throws FrameMismatch.
bool leq(const Support& s, const Support& t);

// Abstract finite stratified set: indices with an explicit strict order given
// by (lower, upper) pairs. Closed transitively on demand.
class GenericStratifiedSet {
 public:
  GenericStratifiedSet(int size, std::vector<std::pair<int, int>> relation);

  int size() const { return size_; }
  const std::vector<std::pair<int, int>>& relation() const { return relation_; }
  // Indices directly below i in the given relation.
  const std::vector<int>& lower(int i) const { return lower_[i]; }

 private:
  int size_;
  std::vector<std::pair<int, int>> relation_;
  std::vector<std::vector<int>> lower_;
};

// Longest strictly descending chain starting at `index`. Throws CycleDetected.
int generic_depth(const GenericStratifiedSet& g, int index);

// Supremum over all indices (0 for an empty set).
int generic_depth(const GenericStratifiedSet& g);

// True iff sigma and its inverse both preserve the (transitively closed)
// order. Throws NotBijective.
bool check_poset_automorphism(const GenericStratifiedSet& g, const std::vector<int>& sigma);

struct StrataOptions {
  bool include_empty = false;  // adjoin the empty lamination as a bottom stratum
  std::int64_t budget = -1;    // stratum cap; negative means enumeration_budget()
};

// Finite, downward closed family of strata ordered by inclusion of supports.
class StrataPoset {
 public:
  // Closes the family downward and sorts it canonically.
  StrataPoset(Frame frame, const std::vector<Support>& supports, StrataOptions options = {});

  // Uses the given family as-is (no closure), for checking arbitrary input.
  static StrataPoset unclosed(Frame frame, const std::vector<Support>& supports);

  const Frame& frame() const { return frame_; }
  int size() const { return static_cast<int>(strata_.size()); }
  const std::vector<Stratum>& strata() const { return strata_; }
  const Stratum& stratum(int i) const { return strata_[i]; }

  // Distinct curves appearing in any stratum, sorted; members(i) indexes them.
  const std::vector<Multicurve>& curves() const { return curves_; }
  const std::vector<int>& members(int i) const { return members_[i]; }

  std::optional<int> index_of(const Support& s) const;
  std::optional<int> curve_index(const Multicurve& c) const;
  std::optional<int> index_of_members(const std::vector<int>& sorted_curve_ids) const;

  bool below(int i, int j) const;  // leq on strata i, j

  // Pairs (lower, upper) where upper has exactly one more component.
  std::vector<std::pair<int, int>> cover_relation() const;

  GenericStratifiedSet as_generic() const;

  int max_depth() const;
  bool includes_empty() const { return include_empty_; }

 private:
  StrataPoset() = default;
  void index();

  Frame frame_;
  bool include_empty_ = false;
  std::vector<Stratum> strata_;
  std::vector<Multicurve> curves_;
  std::vector<std::vector<int>> members_;
};

// All supports of total weight <= max_total. Throws BudgetExceeded.
StrataPoset enumerate_strata(const Frame& frame, std::int64_t max_total, StrataOptions options = {});

struct AxiomReport {
  std::int64_t strata = 0;
  std::int64_t pairs_checked = 0;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

// Partial-order axioms, downward closure, distinct strata, and the frontier
// condition: the closure of cone(t) meets cone(s) iff it contains it, iff s
// is below t. Closure membership is decided from traced coordinates of sample
// points of each cone, independently of the stored component lists.
AxiomReport check_stratification_axioms(const StrataPoset& p);

struct Dimensions {
  int ml = 0;       // 6g-6+2n
  int pml = 0;      // 6g-7+2n
  int u_curve = 0;  // 6g-8+2n
  std::optional<int> u_minimal;  // 6g~-12+2n~+3p, when parameters are given
  bool u_minimal_degenerate = false;  // printed expression is negative
  bool u_minimal_below_u_curve = true;
};

// The three parameters of the minimal-lamination formula, taken verbatim:
// g~, n~ and p (boundary components of the supporting surface).
struct MinimalParams {
  int g_tilde = 0;
  int n_tilde = 0;
  int boundary = 0;
};

Dimensions dim_formulas(int genus, int punctures, std::optional<MinimalParams> minimal = std::nullopt);

}  // namespace lamistrat
