#include "gibbslab/spins.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace gibbslab {

std::uint64_t checked_state_count(std::uint64_t base, std::uint64_t exponent,
                                  std::uint64_t limit) {
  if (base == 0) throw std::invalid_argument("empty spin space");
  std::uint64_t count = 1;
  for (std::uint64_t i = 0; i < exponent; ++i) {
    if (count > limit / base) {
      throw CapacityError("state space " + std::to_string(base) + "^" +
                          std::to_string(exponent) + " exceeds limit " +
                          std::to_string(limit));
    }
    count *= base;
  }
  return count;
}

SpinSpace::SpinSpace(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("spin space must be non-empty");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      throw std::invalid_argument("spin values must be finite");
    }
    if (i > 0 && !(values_[i - 1] < values_[i])) {
      throw std::invalid_argument("spin values must be strictly increasing");
    }
  }
}

SpinSpace SpinSpace::ising() { return SpinSpace({-1.0, 1.0}); }

SpinSpace SpinSpace::potts(int q) {
  if (q < 1) throw std::invalid_argument("Potts q must be >= 1");
  std::vector<double> v(static_cast<std::size_t>(q));
  for (int i = 0; i < q; ++i) v[static_cast<std::size_t>(i)] = i + 1.0;
  return SpinSpace(std::move(v));
}

std::optional<std::size_t> SpinSpace::find(double v) const {
  auto it = std::lower_bound(values_.begin(), values_.end(), v);
  if (it == values_.end() || *it != v) return std::nullopt;
  return static_cast<std::size_t>(it - values_.begin());
}

std::size_t SpinSpace::index_of(double v) const {
  if (auto i = find(v)) return *i;
  throw std::invalid_argument("value " + std::to_string(v) +
                              " is not in the spin space");
}

Configuration::Configuration(const std::map<Vertex, double>& assignment) {
  support_.reserve(assignment.size());
  values_.reserve(assignment.size());
  for (const auto& [x, v] : assignment) {
    support_.push_back(x);
    values_.push_back(v);
  }
}

Configuration::Configuration(std::vector<Vertex> support, std::vector<double> values)
    : support_(std::move(support)), values_(std::move(values)) {
  if (support_.size() != values_.size()) {
    throw std::invalid_argument("support and values differ in length");
  }
  for (std::size_t i = 1; i < support_.size(); ++i) {
    if (!(support_[i - 1] < support_[i])) {
      throw std::invalid_argument("support must be strictly increasing");
    }
  }
}

Configuration Configuration::uniform(std::span<const Vertex> support, double value) {
  std::vector<Vertex> s(support.begin(), support.end());
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  std::vector<double> v(s.size(), value);
  return Configuration(std::move(s), std::move(v));
}

bool Configuration::contains(Vertex x) const {
  return std::binary_search(support_.begin(), support_.end(), x);
}

std::optional<double> Configuration::get(Vertex x) const {
  auto it = std::lower_bound(support_.begin(), support_.end(), x);
  if (it == support_.end() || *it != x) return std::nullopt;
  return values_[static_cast<std::size_t>(it - support_.begin())];
}

double Configuration::at(Vertex x) const {
  if (auto v = get(x)) return *v;
  throw std::out_of_range("vertex " + std::to_string(x) +
                          " outside configuration support");
}

void Configuration::validate(const SpinSpace& space) const {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!space.find(values_[i])) {
      throw std::invalid_argument("vertex " + std::to_string(support_[i]) +
                                  " carries non-spin value " +
                                  std::to_string(values_[i]));
    }
  }
}

Configuration Configuration::negated() const {
  std::vector<double> v(values_.size());
  std::transform(values_.begin(), values_.end(), v.begin(),
                 [](double s) { return -s; });
  return Configuration(support_, std::move(v));
}

std::map<Vertex, double> Configuration::to_map() const {
  std::map<Vertex, double> m;
  for (std::size_t i = 0; i < support_.size(); ++i) m.emplace(support_[i], values_[i]);
  return m;
}

Configuration merge(const Configuration& a, const Configuration& b) {
  std::vector<Vertex> support;
  std::vector<double> values;
  support.reserve(a.size() + b.size());
  values.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a.support()[i] < b.support()[j])) {
      support.push_back(a.support()[i]);
      values.push_back(a.values()[i]);
      ++i;
    } else if (i == a.size() || b.support()[j] < a.support()[i]) {
      support.push_back(b.support()[j]);
      values.push_back(b.values()[j]);
      ++j;
    } else {
      throw std::invalid_argument("cannot merge configurations overlapping at vertex " +
                                  std::to_string(a.support()[i]));
    }
  }
  return Configuration(std::move(support), std::move(values));
}

Configuration restrict(const Configuration& c, std::span<const Vertex> A) {
  std::map<Vertex, double> m;
  for (Vertex x : A) {
    auto v = c.get(x);
    if (!v) {
      throw std::invalid_argument("restriction set contains vertex " +
                                  std::to_string(x) + " outside the support");
    }
    m.emplace(x, *v);
  }
  return Configuration(m);
}

bool leq(const Configuration& a, const Configuration& b) {
  if (a.support() != b.support()) {
    throw std::invalid_argument("partial order needs equal supports");
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.values()[i] > b.values()[i]) return false;
  }
  return true;
}

Configuration supremum(std::span<const Configuration> family) {
  if (family.empty()) throw std::invalid_argument("supremum of an empty family");
  std::vector<double> v = family.front().values();
  for (const auto& c : family.subspan(1)) {
    if (c.support() != family.front().support()) {
      throw std::invalid_argument("supremum needs equal supports");
    }
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = std::max(v[i], c.values()[i]);
  }
  return Configuration(family.front().support(), std::move(v));
}

ConfigEnumerator::ConfigEnumerator(SpinSpace space, std::vector<Vertex> support,
                                   std::uint64_t max_states)
    : space_(std::move(space)), support_(std::move(support)) {
  std::sort(support_.begin(), support_.end());
  if (std::adjacent_find(support_.begin(), support_.end()) != support_.end()) {
    throw std::invalid_argument("enumeration support has duplicate vertices");
  }
  count_ = checked_state_count(space_.size(), support_.size(), max_states);
}

Configuration ConfigEnumerator::at(std::uint64_t index) const {
  if (index >= count_) throw std::out_of_range("configuration index out of range");
  std::vector<int> digits(support_.size());
  detail::decode_digits(index, space_.size(), digits);
  std::vector<double> values(digits.size());
  for (std::size_t i = 0; i < digits.size(); ++i) {
    values[i] = space_.value(static_cast<std::size_t>(digits[i]));
  }
  return Configuration(support_, std::move(values));
}

std::uint64_t ConfigEnumerator::index_of(const Configuration& c) const {
  if (c.support() != support_) {
    throw std::invalid_argument("configuration support does not match enumerator");
  }
  std::uint64_t index = 0;
  for (double v : c.values()) index = index * space_.size() + space_.index_of(v);
  return index;
}

std::vector<Configuration> enumerate_configs(const SpinSpace& space,
                                             std::span<const Vertex> A,
                                             std::uint64_t max_states) {
  ConfigEnumerator e(space, std::vector<Vertex>(A.begin(), A.end()), max_states);
  std::vector<Configuration> out;
  out.reserve(e.count());
  for (std::uint64_t i = 0; i < e.count(); ++i) out.push_back(e.at(i));
  return out;
}

}  // namespace gibbslab
