#include "tsj/exponent.hpp"

#include <algorithm>
#include <sstream>

#include "tsj/error.hpp"

namespace tsj {

Exponent::Exponent(std::vector<Natural> entries) : entries_(std::move(entries)) {
  for (const auto& e : entries_) {
    if (e < 0) throw InvalidArgument("exponent entries must be natural numbers");
  }
}

Exponent::Exponent(std::initializer_list<unsigned long long> entries) {
  entries_.reserve(entries.size());
  for (auto e : entries) entries_.emplace_back(e);
}

Exponent Exponent::zero(std::size_t n) {
  return Exponent(std::vector<Natural>(n, Natural(0)));
}

Exponent Exponent::unit(std::size_t n, std::size_t i) {
  if (i >= n) throw InvalidArgument("unit vector index out of range");
  std::vector<Natural> entries(n, Natural(0));
  entries[i] = 1;
  return Exponent(std::move(entries));
}

VariableSet Exponent::support() const {
  VariableSet result;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] != 0) result.push_back(i);
  }
  return result;
}

Natural Exponent::degree() const {
  Natural total = 0;
  for (const auto& e : entries_) total += e;
  return total;
}

bool Exponent::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Natural& e) { return e == 0; });
}

bool Exponent::is_squarefree() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Natural& e) { return e <= 1; });
}

bool Exponent::divides(const Exponent& other) const {
  if (dimension() != other.dimension()) {
    throw InvalidArgument("exponent dimension mismatch");
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] > other.entries_[i]) return false;
  }
  return true;
}

Exponent Exponent::operator+(const Exponent& other) const {
  if (dimension() != other.dimension()) {
    throw InvalidArgument("exponent dimension mismatch");
  }
  std::vector<Natural> sum(entries_);
  for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += other.entries_[i];
  return Exponent(std::move(sum));
}

std::strong_ordering Exponent::operator<=>(const Exponent& other) const {
  if (auto c = dimension() <=> other.dimension(); c != 0) return c;
  const Natural lhs = degree();
  const Natural rhs = other.degree();
  if (lhs != rhs) return lhs < rhs ? std::strong_ordering::less : std::strong_ordering::greater;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] != other.entries_[i]) {
      return entries_[i] < other.entries_[i] ? std::strong_ordering::less
                                             : std::strong_ordering::greater;
    }
  }
  return std::strong_ordering::equal;
}

std::string to_string(const Exponent& alpha) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < alpha.dimension(); ++i) {
    if (i) out << ',';
    out << alpha[i];
  }
  out << ')';
  return out.str();
}

std::string to_string(const ExponentSet& set) {
  std::string out = "{";
  bool first = true;
  for (const auto& alpha : set) {
    if (!first) out += ", ";
    first = false;
    out += to_string(alpha);
  }
  return out + "}";
}

Exponent permute(const Exponent& alpha, std::span<const std::size_t> perm) {
  if (perm.size() != alpha.dimension()) {
    throw InvalidArgument("permutation length does not match dimension");
  }
  std::vector<Natural> entries(alpha.dimension());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (perm[i] >= perm.size()) throw InvalidArgument("not a permutation");
    entries[perm[i]] = alpha[i];
  }
  return Exponent(std::move(entries));
}

SupportSet::SupportSet(std::size_t n, ExponentSet elements)
    : n_(n), elements_(std::move(elements)) {
  if (n_ == 0) throw InvalidSupport("ambient dimension must be at least 1");
  if (elements_.empty()) throw InvalidSupport("support is empty (zero polynomial)");
  for (const auto& alpha : elements_) {
    if (alpha.dimension() != n_) {
      throw InvalidSupport("exponent " + to_string(alpha) + " has dimension " +
                           std::to_string(alpha.dimension()) + ", expected " +
                           std::to_string(n_));
    }
    if (alpha.is_zero()) {
      throw InvalidSupport("support contains the zero exponent (constant term)");
    }
  }
}

SupportSet::SupportSet(std::size_t n, std::initializer_list<Exponent> elements)
    : SupportSet(n, ExponentSet(elements)) {}

VariableSet SupportSet::variables() const {
  std::vector<bool> used(n_, false);
  for (const auto& alpha : elements_) {
    for (auto i : alpha.support()) used[i] = true;
  }
  VariableSet result;
  for (std::size_t i = 0; i < n_; ++i) {
    if (used[i]) result.push_back(i);
  }
  return result;
}

MonomialIdeal::MonomialIdeal(std::size_t n, const ExponentSet& generators) : n_(n) {
  // The set is ordered by degree first, so any proper divisor of an element
  // precedes it; keeping the undivided elements yields the antichain.
  for (const auto& g : generators) {
    if (g.dimension() != n_) throw InvalidArgument("generator dimension mismatch");
    const bool dominated = std::any_of(min_gens_.begin(), min_gens_.end(),
                                       [&](const Exponent& m) { return m.divides(g); });
    if (!dominated) min_gens_.insert(g);
  }
}

bool MonomialIdeal::is_unit() const {
  return !min_gens_.empty() && min_gens_.begin()->is_zero();
}

std::optional<Exponent> partial(const Exponent& alpha, std::size_t i) {
  if (i >= alpha.dimension()) {
    throw InvalidArgument("variable index " + std::to_string(i + 1) + " out of range 1.." +
                          std::to_string(alpha.dimension()));
  }
  if (alpha[i] == 0) return std::nullopt;
  std::vector<Natural> entries(alpha.entries().begin(), alpha.entries().end());
  entries[i] -= 1;
  return Exponent(std::move(entries));
}

std::vector<std::pair<std::size_t, Exponent>> derivatives(const Exponent& alpha) {
  std::vector<std::pair<std::size_t, Exponent>> result;
  for (auto i : alpha.support()) result.emplace_back(i, *partial(alpha, i));
  return result;
}

ExponentSet derive_all(std::size_t n, const ExponentSet& elements) {
  ExponentSet result;
  for (const auto& alpha : elements) {
    if (alpha.dimension() != n) throw InvalidArgument("exponent dimension mismatch");
    for (auto& [i, beta] : derivatives(alpha)) result.insert(std::move(beta));
  }
  return result;
}

ExponentSet derive_all(const SupportSet& support) {
  return derive_all(support.dimension(), support.elements());
}

MonomialIdeal minimal_generators(std::size_t n, const ExponentSet& generators) {
  return MonomialIdeal(n, generators);
}

bool contains(const MonomialIdeal& ideal, const Exponent& alpha) {
  if (alpha.dimension() != ideal.dimension()) {
    throw InvalidArgument("exponent dimension does not match ideal");
  }
  return std::any_of(ideal.generators().begin(), ideal.generators().end(),
                     [&](const Exponent& g) { return g.divides(alpha); });
}

MonomialIdeal jacobian_ideal(const SupportSet& support) {
  return minimal_generators(support.dimension(), derive_all(support));
}

MonomialIdeal extended_generators(const SupportSet& support) {
  ExponentSet all = derive_all(support);
  all.insert(support.begin(), support.end());
  return minimal_generators(support.dimension(), all);
}

}  // namespace tsj
