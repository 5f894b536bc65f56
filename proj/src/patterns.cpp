#include "wgt/patterns.hpp"

#include <algorithm>

#include "wgt/errors.hpp"

namespace wgt {

std::string WeightDiagnostics::summary() const {
  if (issues.empty()) return "ok";
  std::string out;
  for (const auto& is : issues) {
    if (!out.empty()) out += "; ";
    out += is.message;
  }
  return out;
}

WeightDiagnostics validate_highest_weight(const HighestWeight& weight, const Pyramid& pyr) {
  WeightDiagnostics d;
  if (static_cast<int>(weight.roots.size()) != pyr.n()) {
    d.issues.push_back({WeightIssue::Kind::Arity, 0, 0, 0, 0,
                        "expected " + std::to_string(pyr.n()) + " root lists, got " +
                            std::to_string(weight.roots.size())});
    return d;
  }
  bool sized = true;
  for (int i = 1; i <= pyr.n(); ++i) {
    const int got = static_cast<int>(weight.roots[static_cast<std::size_t>(i - 1)].size());
    if (got != pyr.p(i)) {
      d.issues.push_back({WeightIssue::Kind::Arity, i, 0, 0, 0,
                          "lambda_" + std::to_string(i) + " has " + std::to_string(got) + " roots, expected " +
                              std::to_string(pyr.p(i))});
      sized = false;
    }
  }
  if (!sized) return d;

  for (int i = 1; i < pyr.n(); ++i) {
    for (int k = 1; k <= pyr.p(i); ++k) {
      const Scalar diff = weight.root(i, k) - weight.root(i + 1, k);
      if (!is_nonneg_integer(diff)) {
        d.issues.push_back({WeightIssue::Kind::Dominance, i, i + 1, k, k,
                            "dominance: lambda_" + std::to_string(i) + "^(" + std::to_string(k) + ") - lambda_" +
                                std::to_string(i + 1) + "^(" + std::to_string(k) + ") = " + to_string(diff) +
                                " is not a nonnegative integer"});
      }
    }
  }
  for (int i = 1; i <= pyr.n(); ++i) {
    for (int j = 1; j <= pyr.n(); ++j) {
      for (int k = 1; k <= pyr.p(i); ++k) {
        for (int m = 1; m <= pyr.p(j); ++m) {
          if (k == m) continue;
          // Each unordered pair once.
          if (std::make_pair(i, k) > std::make_pair(j, m)) continue;
          const Scalar diff = weight.root(i, k) - weight.root(j, m);
          if (is_integer(diff)) {
            d.issues.push_back({WeightIssue::Kind::Genericity, i, j, k, m,
                                "genericity: lambda_" + std::to_string(i) + "^(" + std::to_string(k) +
                                    ") - lambda_" + std::to_string(j) + "^(" + std::to_string(m) +
                                    ") = " + to_string(diff) + " is an integer"});
          }
        }
      }
    }
  }
  return d;
}

HighestWeight generic_weight(const Pyramid& pyr, int gap) {
  HighestWeight w;
  for (int i = 1; i <= pyr.n(); ++i) {
    std::vector<Scalar> row;
    for (int k = 1; k <= pyr.p(i); ++k) {
      Scalar frac(1, k + 2);
      row.push_back(Scalar((pyr.n() - i) * gap) + frac);
    }
    w.roots.push_back(std::move(row));
  }
  return w;
}

// ---------------------------------------------------------------- layout

PatternLayout::PatternLayout(Pyramid pyr) : pyr_(std::move(pyr)) {
  for (int r = 1; r <= pyr_.n(); ++r) {
    std::vector<std::size_t> row;
    for (int i = 1; i <= r; ++i) {
      for (int k = 1; k <= pyr_.p(i); ++k) {
        row.push_back(slots_.size());
        slots_.push_back({r, i, k});
      }
    }
    rows_.push_back(std::move(row));
  }
}

bool PatternLayout::valid(int r, int i, int k) const {
  return r >= 1 && r <= pyr_.n() && i >= 1 && i <= r && k >= 1 && k <= pyr_.p(i);
}

std::size_t PatternLayout::index(int r, int i, int k) const {
  if (!valid(r, i, k)) {
    throw IndexError("no pattern slot (" + std::to_string(r) + "," + std::to_string(i) + "," + std::to_string(k) +
                     ")");
  }
  // Row r starts after rows 1..r-1; within the row, i-blocks of size p_i.
  std::size_t idx = rows_[static_cast<std::size_t>(r - 1)].front();
  for (int a = 1; a < i; ++a) idx += static_cast<std::size_t>(pyr_.p(a));
  return idx + static_cast<std::size_t>(k - 1);
}

// ---------------------------------------------------------------- patterns

GTPattern::GTPattern(std::shared_ptr<const PatternLayout> layout, std::vector<Scalar> entries)
    : layout_(std::move(layout)), entries_(std::move(entries)) {
  if (entries_.size() != layout_->size()) throw ArityError("pattern entry count does not match the layout");
}

std::vector<Scalar> GTPattern::row_l_values(int r) const {
  std::vector<Scalar> out;
  for (std::size_t idx : layout_->row(r)) {
    const auto& s = layout_->slots()[idx];
    out.push_back(entries_[idx] - (s.i - 1));
  }
  return out;
}

std::string GTPattern::to_string() const {
  std::string out;
  const int n = layout_->pyramid().n();
  for (int r = n; r >= 1; --r) {
    if (!out.empty()) out += " | ";
    bool first = true;
    for (int i = 1; i <= r; ++i) {
      if (!first) out += "; ";
      first = false;
      for (int k = 1; k <= layout_->pyramid().p(i); ++k) {
        if (k > 1) out += ",";
        out += wgt::to_string(entry(r, i, k));
      }
    }
  }
  return out;
}

bool is_pattern(const GTPattern& mu, const HighestWeight& weight) {
  const Pyramid& pyr = mu.layout().pyramid();
  const int n = pyr.n();
  for (int i = 1; i <= n; ++i) {
    for (int k = 1; k <= pyr.p(i); ++k) {
      if (mu.entry(n, i, k) != weight.root(i, k)) return false;
    }
  }
  for (int r = 1; r < n; ++r) {
    for (int i = 1; i <= r; ++i) {
      for (int k = 1; k <= pyr.p(i); ++k) {
        if (!is_nonneg_integer(mu.entry(r + 1, i, k) - mu.entry(r, i, k))) return false;
        if (!is_nonneg_integer(mu.entry(r, i, k) - mu.entry(r + 1, i + 1, k))) return false;
      }
    }
  }
  return true;
}

std::optional<GTPattern> shift_pattern(const GTPattern& mu, int r, int i, int k, int direction) {
  const Pyramid& pyr = mu.layout().pyramid();
  if (r < 1 || r > pyr.n() - 1 || i < 1 || i > r || k < 1 || k > pyr.p(i)) {
    throw IndexError("shift_pattern slot (" + std::to_string(r) + "," + std::to_string(i) + "," + std::to_string(k) +
                     ") out of range");
  }
  if (direction != 1 && direction != -1) throw IndexError("shift direction must be +1 or -1");
  std::vector<Scalar> e = mu.entries();
  Scalar& x = e[mu.layout().index(r, i, k)];
  x += direction;
  // Only the conditions touching (r, i, k) can change.
  if (!is_nonneg_integer(mu.entry(r + 1, i, k) - x)) return std::nullopt;
  if (!is_nonneg_integer(x - mu.entry(r + 1, i + 1, k))) return std::nullopt;
  if (r > 1) {
    if (i <= r - 1 && !is_nonneg_integer(x - mu.entry(r - 1, i, k))) return std::nullopt;
    if (i >= 2 && k <= pyr.p(i - 1) && !is_nonneg_integer(mu.entry(r - 1, i - 1, k) - x)) return std::nullopt;
  }
  return GTPattern(mu.layout_ptr(), std::move(e));
}

namespace {

// Fills rows n-1, n-2, ..., 1: every slot of row r ranges independently over
// lambda_{r+1,i+1} + {0, ..., lambda_{r+1,i} - lambda_{r+1,i+1}}.
void fill_rows(const PatternLayout& layout, int r, std::vector<Scalar>& entries,
               std::vector<std::vector<Scalar>>& out) {
  if (r == 0) {
    out.push_back(entries);
    return;
  }
  const auto& row = layout.row(r);
  std::vector<Scalar> lo(row.size());
  std::vector<long> span(row.size());
  for (std::size_t a = 0; a < row.size(); ++a) {
    const auto& s = layout.slots()[row[a]];
    lo[a] = entries[layout.index(r + 1, s.i + 1, s.k)];
    const Scalar width = entries[layout.index(r + 1, s.i, s.k)] - lo[a];
    span[a] = width.get_num().get_si();
  }
  std::vector<long> choice(row.size(), 0);
  while (true) {
    for (std::size_t a = 0; a < row.size(); ++a) entries[row[a]] = lo[a] + choice[a];
    fill_rows(layout, r - 1, entries, out);
    std::size_t a = 0;
    while (a < row.size() && choice[a] == span[a]) choice[a++] = 0;
    if (a == row.size()) break;
    ++choice[a];
  }
}

}  // namespace

std::vector<GTPattern> enumerate_patterns(const Pyramid& pyr, const HighestWeight& weight) {
  const auto diag = validate_highest_weight(weight, pyr);
  if (!diag.ok()) throw ValidationError(diag.summary());
  auto layout = std::make_shared<const PatternLayout>(pyr);
  std::vector<Scalar> entries(layout->size());
  const int n = pyr.n();
  for (int i = 1; i <= n; ++i) {
    for (int k = 1; k <= pyr.p(i); ++k) entries[layout->index(n, i, k)] = weight.root(i, k);
  }
  std::vector<std::vector<Scalar>> raw;
  fill_rows(*layout, n - 1, entries, raw);
  std::sort(raw.begin(), raw.end());
  std::vector<GTPattern> out;
  out.reserve(raw.size());
  for (auto& e : raw) out.emplace_back(layout, std::move(e));
  return out;
}

PatternBasis::PatternBasis(Pyramid pyr, HighestWeight weight) : weight_(std::move(weight)) {
  patterns_ = enumerate_patterns(pyr, weight_);
  layout_ = patterns_.front().layout_ptr();
  for (std::size_t idx = 0; idx < patterns_.size(); ++idx) index_.emplace(patterns_[idx].entries(), idx);
}

std::optional<std::size_t> PatternBasis::find(const std::vector<Scalar>& entries) const {
  const auto it = index_.find(entries);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

}  // namespace wgt
