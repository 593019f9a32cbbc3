#include "topomon/symbolic.hpp"

#include <algorithm>
#include <stdexcept>

namespace topomon {

namespace {

bool is_bit_string(const std::string& s) {
  return std::all_of(s.begin(), s.end(), [](char c) { return c == '0' || c == '1'; });
}

/// Shortest word w with period = w^k for some k ≥ 1.
std::string primitive_root(const std::string& period) {
  const std::size_t len = period.size();
  for (std::size_t d = 1; d <= len / 2; ++d) {
    if (len % d != 0) continue;
    bool repeats = true;
    for (std::size_t i = d; i < len && repeats; ++i) repeats = (period[i] == period[i % d]);
    if (repeats) return period.substr(0, d);
  }
  return period;
}

}  // namespace

EpWord::EpWord(std::string preperiod, std::string period)
    : preperiod_(std::move(preperiod)), period_(std::move(period)) {
  if (period_.empty()) throw std::invalid_argument("EpWord: period must be non-empty");
  if (!is_bit_string(preperiod_) || !is_bit_string(period_))
    throw std::invalid_argument("EpWord: bits must be '0' or '1'");
  period_ = primitive_root(period_);
  // The last preperiod bit can be absorbed whenever it matches the last
  // period bit, rotating the period right by one; rotation keeps it primitive.
  while (!preperiod_.empty() && preperiod_.back() == period_.back()) {
    preperiod_.pop_back();
    std::rotate(period_.rbegin(), period_.rbegin() + 1, period_.rend());
  }
}

EpWord EpWord::complement() const {
  auto flip = [](std::string bits) {
    for (char& c : bits) c = (c == '0') ? '1' : '0';
    return bits;
  };
  return EpWord(flip(preperiod_), flip(period_));
}

bool cofinite_is_monitorable(const CofiniteSet& a) {
  return !(a.word.is_infinite() && a.word.is_coinfinite());
}

GridVerdict grid_is_monitorable(const GridSet& a) {
  auto mixed = [](const EpWord& w) { return w.is_infinite() && w.is_coinfinite(); };
  for (const auto& [m, w] : a.exceptional_columns)
    if (mixed(w)) return GridVerdict{false, m};
  if (mixed(a.default_column)) {
    std::uint32_t m = 0;
    while (a.exceptional_columns.count(m)) ++m;
    return GridVerdict{false, m};
  }
  return GridVerdict{true, std::nullopt};
}

std::string sequence_to_string(const Sequence& s) {
  if (s.empty()) return "eps";
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += '.';
    out += std::to_string(s[i]);
  }
  return out;
}

bool scott_interior_nonempty(const ScottSet& a) {
  return a.infinity_member && a.cone_roots.count(Sequence{}) > 0;
}

bool scott_complement_interior_nonempty(const ScottSet& a) {
  return !a.infinity_member && a.cone_roots.empty() && a.spines.empty();
}

bool scott_is_dense(const ScottSet& a) {
  // ∞ lies in every non-empty open; cones and spines meet every open that
  // intersects their branch. A finite set of nodes is avoided by the open set
  // of everything deeper.
  return a.infinity_member || !a.cone_roots.empty() || !a.spines.empty();
}

bool scott_is_monitorable(const ScottSet& a) {
  return scott_interior_nonempty(a) || scott_complement_interior_nonempty(a);
}

bool sum_is_monitorable(const SumSet& a) { return a.z1 == a.z2; }

}  // namespace topomon
