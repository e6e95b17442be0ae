#include "sandwich/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace sandwich {

std::size_t rank_of(std::span<const RatVec> vs) {
  if (vs.empty()) return 0;
  return RatMat::from_rows({vs.begin(), vs.end()}).rank();
}

std::vector<RatVec> independent_subset(std::span<const RatVec> vs) {
  std::vector<RatVec> out;
  for (const auto& v : vs) {
    out.push_back(v);
    if (rank_of(out) < out.size()) out.pop_back();
  }
  return out;
}

RatMat orthogonal_projector(std::span<const RatVec> vs, std::size_t dim) {
  auto basis = independent_subset(vs);
  if (basis.empty()) return RatMat(dim, dim);
  RatMat a = RatMat::from_columns(basis, dim);
  RatMat at = a.transpose();
  return a * (at * a).inverse() * at;
}

Frame::Frame(std::vector<RatVec> basis) : basis_(std::move(basis)) {
  if (basis_.empty()) return;
  ambient_dim_ = basis_.front().size();
  for (const auto& b : basis_)
    if (b.size() != ambient_dim_) throw std::invalid_argument("frame: ragged basis");
  if (rank_of(basis_) != basis_.size()) throw std::invalid_argument("frame: basis is linearly dependent");
  RatMat b = RatMat::from_columns(basis_, ambient_dim_);
  RatMat bt = b.transpose();
  left_inverse_ = (bt * b).inverse() * bt;
}

std::optional<RatVec> Frame::coordinates(const RatVec& v) const {
  if (basis_.empty()) {
    if (v.is_zero()) return RatVec{};
    return std::nullopt;
  }
  if (v.size() != ambient_dim_) return std::nullopt;
  RatVec c = left_inverse_.apply(v);
  if (vector(c) != v) return std::nullopt;
  return c;
}

RatVec Frame::vector(const RatVec& coords) const {
  if (coords.size() != basis_.size()) throw std::invalid_argument("frame: coordinate length mismatch");
  RatVec v(ambient_dim_);
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (!coords[i].is_zero()) v += coords[i] * basis_[i];
  return v;
}

RootSet::RootSet(std::vector<RatVec> vs) : items_(std::move(vs)) {
  std::sort(items_.begin(), items_.end());
  items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
  for (std::size_t i = 1; i < items_.size(); ++i)
    if (items_[i].size() != items_[0].size()) throw std::invalid_argument("root set: mixed dimensions");
  index_.reserve(items_.size());
  for (std::size_t i = 0; i < items_.size(); ++i) index_.emplace(items_[i], i);
}

std::optional<std::size_t> RootSet::index_of(const RatVec& v) const {
  auto it = index_.find(v);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

}  // namespace sandwich
