#include "kva/word.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace kva {

Word Word::from_letters(std::initializer_list<int> letters) {
  Word w;
  for (int l : letters) w = w.appended(l);
  return w;
}

Word Word::parse(std::string_view digits) {
  if (digits.size() > kMaxLen) throw std::invalid_argument("Word: longer than 32 letters");
  Word w;
  for (char c : digits) {
    if (c != '1' && c != '2')
      throw std::invalid_argument(std::string("Word: invalid letter '") + c + "'");
    w = w.appended(c - '0');
  }
  return w;
}

int Word::count(int letter) const {
  int k = 0;
  for (int i = 0; i < size(); ++i) k += (this->letter(i) == letter);
  return k;
}

std::string Word::str() const {
  std::string s;
  s.reserve(len_);
  for (int i = 0; i < size(); ++i) s.push_back(static_cast<char>('0' + letter(i)));
  return s;
}

bool lex_less(Word a, Word b) {
  const int n = std::min(a.size(), b.size());
  for (int i = 0; i < n; ++i) {
    if (a.letter(i) != b.letter(i)) return a.letter(i) < b.letter(i);
  }
  return a.size() < b.size();
}

Word min_rotation(Word w) {
  Word best = w;
  Word cur = w;
  for (int i = 1; i < w.size(); ++i) {
    cur = cur.rotated_left();
    if (cur.bits() < best.bits()) best = cur;
  }
  return best;
}

bool is_lyndon(Word w) {
  if (w.empty()) return false;
  Word cur = w;
  for (int i = 1; i < w.size(); ++i) {
    cur = cur.rotated_left();
    if (cur.bits() <= w.bits()) return false;
  }
  return true;
}

Necklace::Necklace(Word w) {
  if (w.empty()) throw std::invalid_argument("Necklace: empty word has no cyclic class");
  rep_ = min_rotation(w);
}

namespace {

unsigned long long euler_phi(unsigned long long n) {
  unsigned long long result = n;
  for (unsigned long long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

struct NecklaceCache {
  std::shared_mutex mutex;
  std::map<int, std::vector<Necklace>> basis;
  std::map<int, std::map<Word, int>> index;
};

NecklaceCache& necklace_cache() {
  static NecklaceCache cache;
  return cache;
}

}  // namespace

unsigned long long necklace_dim(int n) {
  if (n < 1) throw std::invalid_argument("necklace_dim: degree must be >= 1");
  unsigned long long total = 0;
  for (int d = 1; d <= n; ++d) {
    if (n % d == 0) total += euler_phi(d) << (n / d);
  }
  return total / static_cast<unsigned long long>(n);
}

const std::vector<Necklace>& necklace_basis(int n) {
  if (n < 1 || n > Word::kMaxLen) throw std::invalid_argument("necklace_basis: bad degree");
  auto& cache = necklace_cache();
  {
    std::shared_lock lock(cache.mutex);
    auto it = cache.basis.find(n);
    if (it != cache.basis.end()) return it->second;
  }
  std::vector<Necklace> basis;
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t bits = 0; bits < limit; ++bits) {
    Word w = Word::from_bits(static_cast<std::uint32_t>(bits), n);
    if (min_rotation(w) == w) basis.push_back(Necklace::from_canonical(w));
  }
  std::map<Word, int> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i].rep(), static_cast<int>(i));
  std::unique_lock lock(cache.mutex);
  auto [it, inserted] = cache.basis.emplace(n, std::move(basis));
  if (inserted) cache.index.emplace(n, std::move(index));
  return it->second;
}

int necklace_index(const Necklace& v) {
  necklace_basis(v.size());
  auto& cache = necklace_cache();
  std::shared_lock lock(cache.mutex);
  const auto& index = cache.index.at(v.size());
  auto it = index.find(v.rep());
  return it == index.end() ? -1 : it->second;
}

}  // namespace kva
