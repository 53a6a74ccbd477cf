#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <vector>

#include "qpolis/error.hpp"

namespace qpolis {

/// A finite list or a total countable enumeration.
///
/// Countable enumerators must be total and fair: every intended member
/// appears at some finite index. All enumerators are pure functions of the
/// index, so values are safe to share across threads.
template <class T>
class Enumerable {
 public:
  Enumerable() : items_(std::make_shared<std::vector<T>>()) {}

  explicit Enumerable(std::vector<T> items)
      : items_(std::make_shared<std::vector<T>>(std::move(items))) {}

  explicit Enumerable(std::function<T(std::size_t)> gen) : gen_(std::move(gen)) {}

  bool finite() const { return items_ != nullptr; }

  std::size_t size() const {
    require(finite(), "INFINITE_ENUMERATION", "size() on a countable family");
    return items_->size();
  }

  /// True when this is syntactically the empty family (the empty OpenCode).
  bool empty_code() const { return finite() && items_->empty(); }

  T at(std::size_t k) const {
    if (finite()) return (*items_)[k];
    return gen_(k);
  }

  /// Number of items inspectable with a budget of `fuel` indices.
  std::size_t budget(std::size_t fuel) const {
    return finite() ? std::min(size(), fuel) : fuel;
  }

  template <class F>
  auto map(F f) const -> Enumerable<decltype(f(std::declval<T>()))> {
    using U = decltype(f(std::declval<T>()));
    if (finite()) {
      std::vector<U> out;
      out.reserve(items_->size());
      for (const auto& x : *items_) out.push_back(f(x));
      return Enumerable<U>(std::move(out));
    }
    auto g = gen_;
    return Enumerable<U>(std::function<U(std::size_t)>(
        [g, f](std::size_t k) { return f(g(k)); }));
  }

  static Enumerable<T> concat(const Enumerable<T>& a, const Enumerable<T>& b);
  static Enumerable<T> round_robin(std::vector<Enumerable<T>> families);

 private:
  std::shared_ptr<std::vector<T>> items_;  // null for countable
  std::function<T(std::size_t)> gen_;
};

template <class T>
Enumerable<T> Enumerable<T>::concat(const Enumerable<T>& a, const Enumerable<T>& b) {
  if (a.finite() && b.finite()) {
    std::vector<T> out;
    out.reserve(a.size() + b.size());
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a.at(i));
    for (std::size_t i = 0; i < b.size(); ++i) out.push_back(b.at(i));
    return Enumerable<T>(std::move(out));
  }
  if (a.finite()) {
    std::size_t n = a.size();
    return Enumerable<T>(std::function<T(std::size_t)>(
        [a, b, n](std::size_t k) { return k < n ? a.at(k) : b.at(k - n); }));
  }
  // Interleave so both sides stay fair even when a is infinite.
  return Enumerable<T>(std::function<T(std::size_t)>([a, b](std::size_t k) {
    if (k % 2 == 0) return a.at(k / 2);
    if (b.finite() && b.size() > 0) return b.at((k / 2) % b.size());
    if (b.finite()) return a.at(k / 2);  // b empty: repeat a
    return b.at(k / 2);
  }));
}

template <class T>
Enumerable<T> Enumerable<T>::round_robin(std::vector<Enumerable<T>> families) {
  std::vector<Enumerable<T>> fams;
  for (auto& f : families)
    if (!f.empty_code()) fams.push_back(std::move(f));
  if (fams.empty()) return Enumerable<T>();
  bool all_finite = true;
  for (const auto& f : fams) all_finite &= f.finite();
  if (all_finite) {
    std::vector<T> out;
    std::size_t longest = 0;
    for (const auto& f : fams) longest = std::max(longest, f.size());
    for (std::size_t i = 0; i < longest; ++i)
      for (const auto& f : fams)
        if (i < f.size()) out.push_back(f.at(i));
    return Enumerable<T>(std::move(out));
  }
  std::size_t n = fams.size();
  return Enumerable<T>(std::function<T(std::size_t)>([fams, n](std::size_t k) {
    std::size_t fam = k % n, idx = k / n;
    const auto& f = fams[fam];
    if (f.finite()) return f.at(idx % f.size());
    return f.at(idx);
  }));
}

}  // namespace qpolis
