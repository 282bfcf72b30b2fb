#include "lcslab/geometry/tensor.hpp"

#include <algorithm>

#include "lcslab/error.hpp"

namespace lcs {

FrameTensor::FrameTensor(std::size_t dim, Valence valence) : dim_(dim), valence_(valence) {
  if (valence.up > 1 || valence.down > 4 || valence.rank() == 0) {
    throw Error("unsupported tensor valence (" + std::to_string(valence.up) + "," +
                std::to_string(valence.down) + ")");
  }
  std::size_t count = 1;
  for (std::size_t i = 0; i < valence.rank(); ++i) count *= dim;
  comps_.resize(count);
}

std::size_t FrameTensor::flat(std::span<const std::size_t> idx) const {
  if (idx.size() != rank()) throw Error("tensor index has the wrong rank");
  std::size_t f = 0;
  for (auto i : idx) {
    if (i >= dim_) throw Error("tensor index out of range");
    f = f * dim_ + i;
  }
  return f;
}

std::vector<std::size_t> FrameTensor::unflat(std::size_t flat_index) const {
  std::vector<std::size_t> idx(rank());
  for (std::size_t k = rank(); k > 0; --k) {
    idx[k - 1] = flat_index % dim_;
    flat_index /= dim_;
  }
  return idx;
}

bool FrameTensor::is_zero() const {
  return std::all_of(comps_.begin(), comps_.end(), [](const Expr& e) { return e.is_zero(); });
}

std::size_t FrameTensor::nonzero_count() const {
  return static_cast<std::size_t>(
      std::count_if(comps_.begin(), comps_.end(), [](const Expr& e) { return !e.is_zero(); }));
}

std::optional<std::size_t> FrameTensor::first_nonzero() const {
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    if (!comps_[i].is_zero()) return i;
  }
  return std::nullopt;
}

FrameTensor FrameTensor::operator-(const FrameTensor& rhs) const {
  if (dim_ != rhs.dim_ || valence_ != rhs.valence_) throw Error("tensor shape mismatch");
  FrameTensor out = *this;
  for (std::size_t i = 0; i < comps_.size(); ++i) out.comps_[i] -= rhs.comps_[i];
  return out;
}

FrameTensor FrameTensor::operator+(const FrameTensor& rhs) const {
  if (dim_ != rhs.dim_ || valence_ != rhs.valence_) throw Error("tensor shape mismatch");
  FrameTensor out = *this;
  for (std::size_t i = 0; i < comps_.size(); ++i) out.comps_[i] += rhs.comps_[i];
  return out;
}

std::string index_label(std::span<const std::size_t> idx) {
  std::string s = "[";
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(idx[k] + 1);
  }
  return s + "]";
}

}  // namespace lcs
