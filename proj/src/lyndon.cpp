#include "kva/lyndon.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace kva {

namespace {

int moebius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      result = -result;
    }
  }
  if (n > 1) result = -result;
  return result;
}

struct LyndonCache {
  std::shared_mutex mutex;
  std::map<int, std::vector<LyndonWord>> basis;
  std::map<int, std::map<Word, int>> index;
};

LyndonCache& lyndon_cache() {
  static LyndonCache cache;
  return cache;
}

// Duval's generation of Lyndon words of length exactly n over {1, 2}.
std::vector<Word> lyndon_words(int n) {
  std::vector<Word> out;
  std::vector<int> w{1};
  while (!w.empty()) {
    if (static_cast<int>(w.size()) == n) {
      Word packed;
      for (int l : w) packed = packed.appended(l);
      out.push_back(packed);
    }
    const int k = static_cast<int>(w.size());
    while (static_cast<int>(w.size()) < n) w.push_back(w[w.size() % k]);
    while (!w.empty() && w.back() == 2) w.pop_back();
    if (!w.empty()) w.back() = 2;
  }
  return out;
}

}  // namespace

unsigned long long witt_dim(int n) {
  if (n < 1) throw std::invalid_argument("witt_dim: degree must be >= 1");
  long long total = 0;
  for (int d = 1; d <= n; ++d) {
    if (n % d == 0) total += static_cast<long long>(moebius(d)) << (n / d);
  }
  return static_cast<unsigned long long>(total / n);
}

Word std_right_factor(Word w) {
  if (w.size() < 2) throw std::invalid_argument("std_right_factor: needs length >= 2");
  Word best = w.suffix(1);
  for (int k = 2; k < w.size(); ++k) {
    Word s = w.suffix(k);
    if (lex_less(s, best)) best = s;
  }
  return best;
}

const std::vector<LyndonWord>& lyndon_basis(int n) {
  if (n < 1 || n > Word::kMaxLen) throw std::invalid_argument("lyndon_basis: bad degree");
  auto& cache = lyndon_cache();
  {
    std::shared_lock lock(cache.mutex);
    auto it = cache.basis.find(n);
    if (it != cache.basis.end()) return it->second;
  }
  std::vector<LyndonWord> basis;
  for (Word w : lyndon_words(n)) {
    LyndonWord entry{w, Word(), Word()};
    if (w.size() >= 2) {
      entry.right = std_right_factor(w);
      entry.left = w.prefix(w.size() - entry.right.size());
    }
    basis.push_back(entry);
  }
  std::map<Word, int> index;
  for (std::size_t i = 0; i < basis.size(); ++i)
    index.emplace(basis[i].word, static_cast<int>(i));
  std::unique_lock lock(cache.mutex);
  auto [it, inserted] = cache.basis.emplace(n, std::move(basis));
  if (inserted) cache.index.emplace(n, std::move(index));
  return it->second;
}

int lyndon_index(Word w) {
  if (w.empty()) return -1;
  lyndon_basis(w.size());
  auto& cache = lyndon_cache();
  std::shared_lock lock(cache.mutex);
  const auto& index = cache.index.at(w.size());
  auto it = index.find(w);
  return it == index.end() ? -1 : it->second;
}

}  // namespace kva
