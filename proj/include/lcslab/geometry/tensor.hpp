#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lcslab/symexpr/expr.hpp"

namespace lcs {

/// (contravariant, covariant) slot counts.
struct Valence {
  std::size_t up = 0;
  std::size_t down = 0;
  std::size_t rank() const noexcept { return up + down; }
  bool operator==(const Valence&) const = default;
};

/// Dense array of frame components. Covariant slots come first, in argument
/// order; the contravariant slot (at most one) is last. So for the Riemann
/// tensor, R(E_i, E_j)E_k = sum_l T(i, j, k, l) E_l.
class FrameTensor {
 public:
  FrameTensor() = default;
  FrameTensor(std::size_t dim, Valence valence);

  std::size_t dim() const noexcept { return dim_; }
  Valence valence() const noexcept { return valence_; }
  std::size_t rank() const noexcept { return valence_.rank(); }
  std::size_t size() const noexcept { return comps_.size(); }

  template <class... I>
  Expr& operator()(I... idx) {
    return comps_[flat({static_cast<std::size_t>(idx)...})];
  }
  template <class... I>
  const Expr& operator()(I... idx) const {
    return comps_[flat({static_cast<std::size_t>(idx)...})];
  }
  Expr& at(std::span<const std::size_t> idx) { return comps_[flat(idx)]; }
  const Expr& at(std::span<const std::size_t> idx) const { return comps_[flat(idx)]; }

  std::vector<Expr>& comps() noexcept { return comps_; }
  const std::vector<Expr>& comps() const noexcept { return comps_; }

  std::size_t flat(std::span<const std::size_t> idx) const;
  std::size_t flat(std::initializer_list<std::size_t> idx) const {
    return flat(std::span<const std::size_t>(idx.begin(), idx.size()));
  }
  std::vector<std::size_t> unflat(std::size_t flat_index) const;

  bool is_zero() const;
  std::size_t nonzero_count() const;
  std::optional<std::size_t> first_nonzero() const;

  FrameTensor operator-(const FrameTensor& rhs) const;
  FrameTensor operator+(const FrameTensor& rhs) const;
  bool operator==(const FrameTensor&) const = default;

 private:
  std::size_t dim_ = 0;
  Valence valence_;
  std::vector<Expr> comps_;
};

/// "[1,3,2]" with 1-based frame indices.
std::string index_label(std::span<const std::size_t> idx);

}  // namespace lcs
