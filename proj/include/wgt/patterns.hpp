#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wgt/arith/scalar.hpp"
#include "wgt/pyramid.hpp"

namespace wgt {

// roots[i-1] holds lambda_i^(1..p_i); lambda_i(u) = prod_k (u + lambda_i^(k)).
struct HighestWeight {
  std::vector<std::vector<Scalar>> roots;

  const Scalar& root(int i, int k) const {
    return roots.at(static_cast<std::size_t>(i - 1)).at(static_cast<std::size_t>(k - 1));
  }
  friend bool operator==(const HighestWeight&, const HighestWeight&) = default;
};

struct WeightIssue {
  enum class Kind { Arity, Dominance, Genericity };
  Kind kind;
  // 1-based indices; for dominance (i, i+1, k, k), for genericity (i, j, k, m).
  int i = 0;
  int j = 0;
  int k = 0;
  int m = 0;
  std::string message;
};

struct WeightDiagnostics {
  std::vector<WeightIssue> issues;
  bool ok() const { return issues.empty(); }
  std::string summary() const;
};

WeightDiagnostics validate_highest_weight(const HighestWeight& weight, const Pyramid& pyr);

// lambda_i^(k) = (n - i) * gap + 1/(k + 2): same-column gaps are integers and
// different columns never differ by an integer.
HighestWeight generic_weight(const Pyramid& pyr, int gap = 1);

// Slot bookkeeping for the triangular array lambda_{ri}^(k), 1 <= i <= r <= n,
// k <= p_i.  Flat order: r ascending, then i, then k.
class PatternLayout {
 public:
  struct Slot {
    int r;
    int i;
    int k;
  };

  explicit PatternLayout(Pyramid pyr);

  const Pyramid& pyramid() const { return pyr_; }
  std::size_t size() const { return slots_.size(); }
  const std::vector<Slot>& slots() const { return slots_; }
  std::size_t index(int r, int i, int k) const;
  bool valid(int r, int i, int k) const;
  // Flat indices of row r in (i, k) order; size p_1 + ... + p_r.
  const std::vector<std::size_t>& row(int r) const { return rows_.at(static_cast<std::size_t>(r - 1)); }

 private:
  Pyramid pyr_;
  std::vector<Slot> slots_;
  std::vector<std::vector<std::size_t>> rows_;
};

class GTPattern {
 public:
  GTPattern(std::shared_ptr<const PatternLayout> layout, std::vector<Scalar> entries);

  const PatternLayout& layout() const { return *layout_; }
  const std::shared_ptr<const PatternLayout>& layout_ptr() const { return layout_; }
  const std::vector<Scalar>& entries() const { return entries_; }
  const Scalar& entry(int r, int i, int k) const { return entries_[layout_->index(r, i, k)]; }
  // l_{ri}^(k) = lambda_{ri}^(k) - i + 1
  Scalar l_value(int r, int i, int k) const { return entry(r, i, k) - (i - 1); }
  // l-values of row r in (i, k) order.
  std::vector<Scalar> row_l_values(int r) const;

  friend bool operator==(const GTPattern& a, const GTPattern& b) { return a.entries_ == b.entries_; }
  friend bool operator<(const GTPattern& a, const GTPattern& b) { return a.entries_ < b.entries_; }

  std::string to_string() const;

 private:
  std::shared_ptr<const PatternLayout> layout_;
  std::vector<Scalar> entries_;
};

// Top row equals the weight and every interlacing condition holds.
bool is_pattern(const GTPattern& mu, const HighestWeight& weight);

// Replaces lambda_{ri}^(k) by lambda_{ri}^(k) + direction.  Requires
// 1 <= i <= r <= n-1 and k <= p_i (IndexError otherwise); nullopt when the
// result breaks interlacing.
std::optional<GTPattern> shift_pattern(const GTPattern& mu, int r, int i, int k, int direction);

// Ordered basis of L(lambda(u)) with index lookup.
class PatternBasis {
 public:
  PatternBasis(Pyramid pyr, HighestWeight weight);

  const Pyramid& pyramid() const { return layout_->pyramid(); }
  const HighestWeight& weight() const { return weight_; }
  const PatternLayout& layout() const { return *layout_; }
  std::size_t size() const { return patterns_.size(); }
  const GTPattern& operator[](std::size_t idx) const { return patterns_[idx]; }
  const std::vector<GTPattern>& patterns() const { return patterns_; }
  std::optional<std::size_t> find(const std::vector<Scalar>& entries) const;
  std::optional<std::size_t> find(const GTPattern& mu) const { return find(mu.entries()); }

 private:
  std::shared_ptr<const PatternLayout> layout_;
  HighestWeight weight_;
  std::vector<GTPattern> patterns_;
  std::map<std::vector<Scalar>, std::size_t> index_;
};

// Every pattern for the weight, sorted lexicographically on the flat entries.
// Throws ValidationError when the weight is not dominant and generic.
std::vector<GTPattern> enumerate_patterns(const Pyramid& pyr, const HighestWeight& weight);

}  // namespace wgt
