#include "dequiv/core/sparse.hpp"

#include <algorithm>

namespace dequiv::core {

SparseVector basis_vector(int index, CycScalar coef) {
  if (coef.is_zero()) return {};
  return {Entry{index, std::move(coef)}};
}

SparseVector from_dense(std::span<const CycScalar> dense) {
  SparseVector out;
  for (size_t i = 0; i < dense.size(); ++i)
    if (!dense[i].is_zero()) out.push_back({static_cast<int>(i), dense[i]});
  return out;
}

exact::Vector to_dense(const SparseVector& v, int dim) {
  exact::Vector out(dim);
  for (const auto& e : v) out[e.index] = e.value;
  return out;
}

SparseVector scaled(const SparseVector& v, const CycScalar& s) {
  SparseVector out;
  if (s.is_zero()) return out;
  out.reserve(v.size());
  for (const auto& e : v) {
    CycScalar x = e.value * s;
    if (!x.is_zero()) out.push_back({e.index, std::move(x)});
  }
  return out;
}

namespace {

SparseVector merge(const SparseVector& a, const SparseVector& b, bool negate_b) {
  SparseVector out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].index < b[j].index)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].index < a[i].index) {
      out.push_back({b[j].index, negate_b ? -b[j].value : b[j].value});
      ++j;
    } else {
      CycScalar x = negate_b ? a[i].value - b[j].value : a[i].value + b[j].value;
      if (!x.is_zero()) out.push_back({a[i].index, std::move(x)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

SparseVector add(const SparseVector& a, const SparseVector& b) { return merge(a, b, false); }
SparseVector subtract(const SparseVector& a, const SparseVector& b) { return merge(a, b, true); }

SparseVector combine(std::vector<Entry> raw) {
  std::sort(raw.begin(), raw.end(), [](const Entry& a, const Entry& b) { return a.index < b.index; });
  SparseVector out;
  out.reserve(raw.size());
  for (auto& e : raw) {
    if (!out.empty() && out.back().index == e.index) {
      out.back().value += e.value;
      if (out.back().value.is_zero()) out.pop_back();
    } else if (!e.value.is_zero()) {
      out.push_back(std::move(e));
    }
  }
  return out;
}

CycScalar coefficient(const SparseVector& v, int index) {
  auto it = std::lower_bound(v.begin(), v.end(), index,
                             [](const Entry& e, int i) { return e.index < i; });
  if (it != v.end() && it->index == index) return it->value;
  return {};
}

void Accumulator::touch(int index) {
  if (!mark_[index]) {
    mark_[index] = 1;
    touched_.push_back(index);
  }
}

void Accumulator::add(int index, const CycScalar& value) {
  if (value.is_zero()) return;
  touch(index);
  slots_[index] += value;
}

void Accumulator::add_product(int index, const CycScalar& a, const CycScalar& b) {
  if (a.is_zero() || b.is_zero()) return;
  touch(index);
  slots_[index].add_product(a, b);
}

void Accumulator::add_scaled(const SparseVector& v, const CycScalar& s) {
  for (const auto& e : v) add_product(e.index, e.value, s);
}

SparseVector Accumulator::take() {
  std::sort(touched_.begin(), touched_.end());
  SparseVector out;
  out.reserve(touched_.size());
  for (int i : touched_) {
    if (!slots_[i].is_zero()) out.push_back({i, std::move(slots_[i])});
    slots_[i] = CycScalar();
    mark_[i] = 0;
  }
  touched_.clear();
  return out;
}

}  // namespace dequiv::core
