// Finitely supported real sequences on Z and the exact difference operators
// acting on them.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace hardy {

using Index = std::int64_t;

class FiniteSequence {
 public:
  FiniteSequence() = default;
  // Stores values at offset, offset+1, ...; the result is canonicalized.
  FiniteSequence(Index offset, std::vector<double> values);

  static FiniteSequence delta(Index n, double value = 1.0);

  [[nodiscard]] double at(Index n) const;
  double operator[](Index n) const { return at(n); }

  [[nodiscard]] bool is_zero() const { return values_.empty(); }
  [[nodiscard]] Index offset() const { return offset_; }
  // One past the last stored index. Equals offset() for the zero sequence.
  [[nodiscard]] Index end() const { return offset_ + static_cast<Index>(values_.size()); }
  [[nodiscard]] Index first_index() const { return offset_; }
  [[nodiscard]] Index last_index() const { return end() - 1; }
  [[nodiscard]] const std::vector<double>& values() const { return values_; }
  [[nodiscard]] std::size_t size() const { return values_.size(); }

  [[nodiscard]] FiniteSequence canonical() const { return *this; }

  bool operator==(const FiniteSequence& other) const = default;

 private:
  void canonicalize();
  Index offset_ = 0;
  std::vector<double> values_;
};

struct BoundaryOrder {
  int ell;
  explicit BoundaryOrder(int l);
};

FiniteSequence grad(const FiniteSequence& u);
FiniteSequence divergence(const FiniteSequence& u);
FiniteSequence shift(const FiniteSequence& u, Index k);
FiniteSequence laplace(const FiniteSequence& u);
FiniteSequence laplace_power(const FiniteSequence& u, int m);
FiniteSequence half_laplace_power(const FiniteSequence& u, BoundaryOrder ell);

FiniteSequence add(const FiniteSequence& a, const FiniteSequence& b);
FiniteSequence scale(const FiniteSequence& a, double c);

struct IndexRange {
  Index first;
  Index last;  // inclusive
};

using WeightFn = std::function<double(Index)>;

// Sum over the range of w(n) u_n v_n, compensated. Without a range, the
// intersection of the supports is used. Throws std::domain_error if w is not
// finite at an index of the range.
double weighted_sum(const FiniteSequence& u, const FiniteSequence& v, const WeightFn& w,
                    std::optional<IndexRange> range = std::nullopt);

// Sum over n >= from of u_n^2 (plain, compensated).
double sum_squares_from(const FiniteSequence& u, Index from);

}  // namespace hardy
