#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "scottperm/error.hpp"
#include "scottperm/permanent.hpp"
#include "scottperm/roots.hpp"

namespace scottperm {

/// An involution of {0, ..., n-1}: pairing[i] is the partner of i, or i
/// itself for a fixed point.
struct Involution {
  std::vector<std::size_t> pairing;

  bool is_valid() const {
    for (std::size_t i = 0; i < pairing.size(); ++i) {
      if (pairing[i] >= pairing.size() || pairing[pairing[i]] != i) return false;
    }
    return true;
  }

  std::size_t fixed_points() const {
    std::size_t count = 0;
    for (std::size_t i = 0; i < pairing.size(); ++i) count += pairing[i] == i;
    return count;
  }
};

/// I(n) = I(n-1) + (n-1) I(n-2).
inline std::uint64_t involution_count(std::size_t n) {
  std::uint64_t prev = 1;
  std::uint64_t cur = 1;
  for (std::size_t k = 2; k <= n; ++k) {
    const std::uint64_t next = cur + (k - 1) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

/// Single-consumer stream over all involutions of {0, ..., n-1}. The
/// smallest unmatched index is decided first: fixed, then paired with each
/// larger unmatched index in increasing order.
class InvolutionStream {
 public:
  explicit InvolutionStream(std::size_t n) : n_(n), partner_(n, kUnset) {}

  std::optional<Involution> next() {
    if (done_) return std::nullopt;
    if (!started_) {
      started_ = true;
      fill_fixed();
      return current();
    }
    while (!decisions_.empty()) {
      const auto [i, choice] = decisions_.back();
      decisions_.pop_back();
      partner_[i] = kUnset;
      partner_[choice] = kUnset;
      for (std::size_t j = (choice == i ? i : choice) + 1; j < n_; ++j) {
        if (partner_[j] != kUnset) continue;
        assign(i, j);
        fill_fixed();
        return current();
      }
    }
    done_ = true;
    return std::nullopt;
  }

 private:
  static constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

  struct Decision {
    std::size_t index;
    std::size_t choice;
  };

  void assign(std::size_t i, std::size_t j) {
    partner_[i] = j;
    partner_[j] = i;
    decisions_.push_back({i, j});
  }

  void fill_fixed() {
    for (std::size_t i = 0; i < n_; ++i) {
      if (partner_[i] == kUnset) assign(i, i);
    }
  }

  Involution current() const { return Involution{partner_}; }

  std::size_t n_;
  std::vector<std::size_t> partner_;
  std::vector<Decision> decisions_;
  bool started_ = false;
  bool done_ = false;
};

inline std::vector<Involution> enumerate_involutions(std::size_t n) {
  std::vector<Involution> out;
  InvolutionStream stream(n);
  while (auto inv = stream.next()) out.push_back(std::move(*inv));
  return out;
}

/// Sum over involutions of prod_{(ij)} 1/(x_i - x_j)^2 prod_{(k)} fixed_weight[k].
inline Complex weighted_involution_sum(const ComplexVector& x, const ComplexVector& fixed_weight) {
  const std::size_t n = x.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(x[i] - x[j]) < kSingularThreshold) {
        throw Error(ErrorKind::RepeatedXRoot, "two x-roots coincide");
      }
    }
  }
  Complex total = 0.0;
  InvolutionStream stream(n);
  while (auto inv = stream.next()) {
    Complex term = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t j = inv->pairing[i];
      if (j == i) {
        term *= fixed_weight[i];
      } else if (i < j) {
        const Complex d = x[i] - x[j];
        term /= d * d;
      }
    }
    total += term;
  }
  return total;
}

/// L(s; X, Y) = sum_{x != s} 1/(x - s) + sum_{y} 1/(s - y) at s = x[k].
inline Complex fixed_point_weight(const ComplexVector& x, const ComplexVector& y, std::size_t k) {
  Complex w = 0.0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (j != k) w += 1.0 / (x[j] - x[k]);
  }
  for (const Complex& yj : y) {
    const Complex d = x[k] - yj;
    if (std::abs(d) < kSingularThreshold) throw Error(ErrorKind::SingularEntry, "x_k and y_j coincide");
    w += 1.0 / d;
  }
  return w;
}

/// The permanent as a weighted sum over involutions of the x-indices.
inline Complex involution_sum(const ComplexVector& x, const ComplexVector& y) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      if (std::abs(x[i] - x[j]) < kSingularThreshold) {
        throw Error(ErrorKind::RepeatedXRoot, "two x-roots coincide");
      }
    }
  }
  ComplexVector weights(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) weights[k] = fixed_point_weight(x, y, k);
  return weighted_involution_sum(x, weights);
}

}  // namespace scottperm
