#include "mtc/state_dim.hpp"

#include <stdexcept>

namespace mtc {
namespace {

void mul_add(std::int64_t& acc, std::int64_t a, std::int64_t b) {
  std::int64_t prod = 0;
  if (__builtin_mul_overflow(a, b, &prod) || __builtin_add_overflow(acc, prod, &acc))
    throw std::overflow_error("state dimension exceeds 64-bit range");
}

}  // namespace

StateCounter::StateCounter(const FusionTensor& N, std::span<const Label> dual, Label zero) : zero_(zero) {
  const int n = N.rank();
  if (static_cast<int>(dual.size()) != n) throw std::invalid_argument("StateCounter: dual map has wrong size");
  for (int i = 0; i < n; ++i) fusion_.push_back(N.matrix(i).cast<std::int64_t>());
  handle_ = Mat::Zero(n, n);
  for (int x = 0; x < n; ++x) handle_ += fusion_[x] * fusion_[dual[x]];
}

StateCounter::Vec StateCounter::start() const {
  Vec v = Vec::Zero(rank());
  v(zero_) = 1;
  return v;
}

StateCounter::Vec StateCounter::absorb(const Vec& v, Label i) const {
  const Mat& m = fusion_.at(i);
  Vec out = Vec::Zero(rank());
  for (int j = 0; j < rank(); ++j) {
    if (!v(j)) continue;
    for (int k = 0; k < rank(); ++k)
      if (m(j, k)) mul_add(out(k), v(j), m(j, k));
  }
  return out;
}

StateCounter::Vec StateCounter::closing(int genus) const {
  if (genus < 0) throw std::invalid_argument("negative genus");
  Vec c = Vec::Zero(rank());
  c(zero_) = 1;
  for (int g = 0; g < genus; ++g) {
    Vec next = Vec::Zero(rank());
    for (int a = 0; a < rank(); ++a)
      for (int b = 0; b < rank(); ++b)
        if (handle_(a, b) && c(b)) mul_add(next(a), handle_(a, b), c(b));
    c = std::move(next);
  }
  return c;
}

std::int64_t StateCounter::close(const Vec& v, const Vec& closing) const {
  std::int64_t s = 0;
  for (int a = 0; a < rank(); ++a)
    if (v(a) && closing(a)) mul_add(s, v(a), closing(a));
  return s;
}

std::int64_t StateCounter::close(const Vec& v, int genus) const { return close(v, closing(genus)); }

std::int64_t StateCounter::component(int genus, std::span<const Label> labels) const {
  Vec v = start();
  for (Label l : labels) v = absorb(v, l);
  return close(v, genus);
}

std::int64_t StateCounter::operator()(const Surface& a) const {
  std::int64_t out = 1;
  for (const auto& c : a.components) {
    std::vector<Label> ls;
    for (const auto& p : c.points) ls.push_back(p.label);
    const std::int64_t d = component(c.genus, ls);
    std::int64_t prod = 0;
    if (__builtin_mul_overflow(out, d, &prod)) throw std::overflow_error("state dimension exceeds 64-bit range");
    out = prod;
  }
  return out;
}

}  // namespace mtc
