#include "oak/uea.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace oak {

std::vector<unsigned> exponents(const Word& sorted_word, std::size_t dim) {
  std::vector<unsigned> out(dim, 0);
  for (auto letter : sorted_word) ++out.at(letter);
  return out;
}

UEAElement UEAElement::monomial(int rank, const Word& sorted_word, const Scalar& c) {
  if (!std::is_sorted(sorted_word.begin(), sorted_word.end()))
    throw std::invalid_argument("PBW monomial must be a sorted word");
  UEAElement out(rank);
  out.add(sorted_word, c);
  return out;
}

UEAElement UEAElement::from_lie(const LieElement& x) {
  const LieAlgebra& g = LieAlgebra::of_rank(x.rank());
  UEAElement out(x.rank());
  for (const auto& [b, c] : x.terms()) out.add(Word{static_cast<std::uint8_t>(g.index_of(b))}, c);
  return out;
}

std::size_t UEAElement::degree() const {
  std::size_t d = 0;
  for (const auto& [w, c] : terms_) d = std::max(d, w.size());
  return d;
}

Scalar UEAElement::coefficient(const Word& sorted_word) const {
  auto it = terms_.find(sorted_word);
  return it == terms_.end() ? Scalar() : it->second;
}

void UEAElement::add(const Word& sorted_word, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(sorted_word, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

UEAElement& UEAElement::operator+=(const UEAElement& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

UEAElement& UEAElement::operator-=(const UEAElement& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

UEAElement& UEAElement::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

// ---------------------------------------------------------------------------
// Rewriting kernel. Expansions carry rational coefficients only (structure
// constants are rational), so the kernel never touches rational functions.

namespace {

using Expansion = std::map<Word, Rational>;

void accumulate(Expansion& into, const Expansion& from, const Rational& scale) {
  for (const auto& [w, c] : from) {
    auto [it, inserted] = into.try_emplace(w, c * scale);
    if (!inserted) {
      it->second += c * scale;
      if (it->second == 0) into.erase(it);
    }
  }
}

Word substitute_pair(const Word& w, std::size_t i, std::uint8_t letter) {
  Word out;
  out.reserve(w.size() - 1);
  out.insert(out.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
  out.push_back(letter);
  out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(i) + 2, w.end());
  return out;
}

class NormalFormCache {
 public:
  std::shared_ptr<const Expansion> find(const std::string& key) const {
    std::shared_lock lock(mutex_);
    auto it = map_.find(key);
    return it == map_.end() ? nullptr : it->second;
  }
  std::shared_ptr<const Expansion> insert(const std::string& key, std::shared_ptr<const Expansion> value) {
    std::unique_lock lock(mutex_);
    return map_.try_emplace(key, std::move(value)).first->second;
  }
  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return map_.size();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, std::shared_ptr<const Expansion>> map_;
};

NormalFormCache& cache() {
  static NormalFormCache instance;
  return instance;
}

std::shared_ptr<const Expansion> expand_memo(const Word& w, const LieAlgebra& g) {
  std::string key(1, static_cast<char>(g.rank()));
  key.append(w.begin(), w.end());
  if (auto hit = cache().find(key)) return hit;

  auto result = std::make_shared<Expansion>();
  std::size_t i = w.size();
  while (i >= 2 && w[i - 2] <= w[i - 1]) --i;
  if (i < 2) {
    result->emplace(w, Rational(1));
  } else {
    const std::size_t p = i - 2;  // rightmost inversion at (p, p+1)
    Word swapped = w;
    std::swap(swapped[p], swapped[p + 1]);
    accumulate(*result, *expand_memo(swapped, g), Rational(1));
    for (const auto& [k, r] : g.bracket(w[p], w[p + 1]))
      accumulate(*result, *expand_memo(substitute_pair(w, p, k), g), r);
  }
  return cache().insert(key, std::move(result));
}

Expansion expand_plain(const Word& w, const LieAlgebra& g, RewriteStrategy strategy, std::mt19937_64* rng) {
  std::vector<std::size_t> inversions;
  for (std::size_t p = 0; p + 1 < w.size(); ++p)
    if (w[p] > w[p + 1]) inversions.push_back(p);
  if (inversions.empty()) return Expansion{{w, Rational(1)}};
  std::size_t p = 0;
  switch (strategy) {
    case RewriteStrategy::Rightmost:
      p = inversions.back();
      break;
    case RewriteStrategy::Leftmost:
      p = inversions.front();
      break;
    case RewriteStrategy::Random: {
      if (rng == nullptr) throw std::invalid_argument("random rewriting strategy needs a generator");
      std::uniform_int_distribution<std::size_t> pick(0, inversions.size() - 1);
      p = inversions[pick(*rng)];
      break;
    }
  }
  Word swapped = w;
  std::swap(swapped[p], swapped[p + 1]);
  Expansion out = expand_plain(swapped, g, strategy, rng);
  for (const auto& [k, r] : g.bracket(w[p], w[p + 1]))
    accumulate(out, expand_plain(substitute_pair(w, p, k), g, strategy, rng), r);
  return out;
}

void check_letters(const Word& w, const LieAlgebra& g) {
  for (auto letter : w)
    if (letter >= g.dim()) throw std::out_of_range("basis index out of range for rank " + std::to_string(g.rank()));
}

UEAElement to_element(const Expansion& e, int n, const Scalar& scale) {
  UEAElement out(n);
  for (const auto& [w, c] : e) out.add(w, scale * Scalar(c));
  return out;
}

}  // namespace

std::size_t normal_order_cache_size() { return cache().size(); }

UEAElement normal_order(const Word& word, int n) {
  const LieAlgebra& g = LieAlgebra::of_rank(n);
  check_letters(word, g);
  return to_element(*expand_memo(word, g), n, Scalar(1));
}

UEAElement normal_order(const std::vector<BasisElement>& word, int n) {
  const LieAlgebra& g = LieAlgebra::of_rank(n);
  Word w;
  w.reserve(word.size());
  for (const auto& b : word) w.push_back(static_cast<std::uint8_t>(g.index_of(b)));
  return normal_order(w, n);
}

UEAElement normal_order_with(const Word& word, int n, RewriteStrategy strategy, std::mt19937_64* rng) {
  const LieAlgebra& g = LieAlgebra::of_rank(n);
  check_letters(word, g);
  return to_element(expand_plain(word, g, strategy, rng), n, Scalar(1));
}

UEAElement multiply(const UEAElement& u, const UEAElement& v) {
  if (u.rank() != v.rank()) throw std::invalid_argument("rank mismatch in UEA product");
  const LieAlgebra& g = LieAlgebra::of_rank(u.rank());
  UEAElement out(u.rank());
  for (const auto& [wu, cu] : u.terms()) {
    for (const auto& [wv, cv] : v.terms()) {
      Word w = wu;
      w.insert(w.end(), wv.begin(), wv.end());
      const Scalar c = cu * cv;
      for (const auto& [m, r] : *expand_memo(w, g)) out.add(m, c * Scalar(r));
    }
  }
  return out;
}

UEAElement reduce_central(const UEAElement& u) {
  const LieAlgebra& g = LieAlgebra::of_rank(u.rank());
  const auto z = static_cast<std::uint8_t>(g.central_index());
  const Scalar s2 = Scalar::symbol("s").pow(2);
  UEAElement out(u.rank());
  for (const auto& [w, c] : u.terms()) {
    Word rest;
    long k = 0;
    for (auto letter : w) {
      if (letter == z) ++k;
      else rest.push_back(letter);
    }
    out.add(rest, c * s2.pow(k));
  }
  return out;
}

VermaVector VermaVector::highest(const Weight& lambda) {
  VermaVector v{lambda, {}};
  v.terms.emplace(Word{}, Scalar(1));
  return v;
}

VermaVector act_on_verma(const UEAElement& u, const VermaVector& v) {
  const int n = v.rank();
  if (u.rank() != n) throw std::invalid_argument("rank mismatch in Verma action");
  const LieAlgebra& g = LieAlgebra::of_rank(n);
  VermaVector out{v.lambda, {}};
  auto add = [&](const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = out.terms.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) out.terms.erase(it);
    }
  };
  for (const auto& [wu, cu] : u.terms()) {
    for (const auto& [wv, cv] : v.terms) {
      Word w = wu;
      w.insert(w.end(), wv.begin(), wv.end());
      for (const auto& [m, r] : *expand_memo(w, g)) {
        // Sorted word: n_- letters, then h_i, z, then n_+ (which kill v_lambda).
        Word lower;
        Scalar value = cu * cv * Scalar(r);
        bool killed = false;
        for (auto letter : m) {
          const auto& b = g.element(letter);
          switch (b.block()) {
            case 0:
              lower.push_back(letter);
              break;
            case 1:
              value *= v.lambda.h.at(static_cast<std::size_t>(b.index - 1));
              break;
            case 2:
              value *= v.lambda.z;
              break;
            default:
              killed = true;
          }
          if (killed) break;
        }
        if (!killed) add(lower, value);
      }
    }
  }
  return out;
}

}  // namespace oak
