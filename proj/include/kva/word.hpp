#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace kva {

// Word over the two-letter alphabet {1, 2}, bit-packed: letter 1 maps to bit 0,
// letter 2 to bit 1, first letter held in the most significant of the `size`
// low bits. The empty word is the algebra unit.
class Word {
 public:
  static constexpr int kMaxLen = 32;

  constexpr Word() = default;

  static Word single(int letter) { return Word(static_cast<std::uint32_t>(letter - 1), 1); }
  static Word from_letters(std::initializer_list<int> letters);
  // Parses digit strings such as "112"; throws std::invalid_argument otherwise.
  static Word parse(std::string_view digits);
  static Word from_bits(std::uint32_t bits, int len) { return Word(bits, len); }

  int size() const { return static_cast<int>(len_); }
  bool empty() const { return len_ == 0; }
  std::uint32_t bits() const { return bits_; }

  // 0-based position, returns 1 or 2.
  int letter(int i) const { return static_cast<int>((bits_ >> (len_ - 1 - i)) & 1u) + 1; }
  int first_letter() const { return letter(0); }
  int last_letter() const { return static_cast<int>(bits_ & 1u) + 1; }
  int count(int letter) const;

  Word appended(int letter) const {
    return Word((bits_ << 1) | static_cast<std::uint32_t>(letter - 1), size() + 1);
  }
  Word dropped_last() const { return Word(bits_ >> 1, size() - 1); }
  static Word concat(Word a, Word b) {
    return Word((a.bits_ << b.len_) | b.bits_, a.size() + b.size());
  }
  Word prefix(int k) const {
    const int drop = size() - k;
    return Word(drop >= 32 ? 0u : (bits_ >> drop), k);
  }
  Word suffix(int k) const {
    const std::uint32_t mask = (k >= 32) ? ~std::uint32_t{0} : ((std::uint32_t{1} << k) - 1u);
    return Word(bits_ & mask, k);
  }
  Word rotated_left() const {
    const std::uint32_t head = (bits_ >> (len_ - 1)) & 1u;
    const std::uint32_t mask = (len_ == 32) ? ~std::uint32_t{0} : ((std::uint32_t{1} << len_) - 1u);
    return Word(((bits_ << 1) & mask) | head, size());
  }

  std::string str() const;

  // Orders by degree first, then lexicographically within a degree.
  std::uint64_t key() const { return (std::uint64_t{len_} << 32) | bits_; }
  friend bool operator==(Word a, Word b) { return a.key() == b.key(); }
  friend std::strong_ordering operator<=>(Word a, Word b) { return a.key() <=> b.key(); }

 private:
  constexpr Word(std::uint32_t bits, int len)
      : bits_(bits), len_(static_cast<std::uint32_t>(len)) {}

  std::uint32_t bits_ = 0;
  std::uint32_t len_ = 0;
};

// True lexicographic order; a proper prefix sorts before its extensions.
bool lex_less(Word a, Word b);

// Lexicographically minimal rotation; w must be non-empty.
Word min_rotation(Word w);

// Strictly smaller than every proper rotation (hence aperiodic).
bool is_lyndon(Word w);

// Cyclic word represented by its lexicographically minimal rotation.
class Necklace {
 public:
  // Canonicalizes; throws std::invalid_argument on the empty word.
  explicit Necklace(Word w);
  static Necklace from_canonical(Word w) { return Necklace(w, 0); }

  Word rep() const { return rep_; }
  int size() const { return rep_.size(); }
  std::string str() const { return rep_.str(); }

  friend bool operator==(const Necklace& a, const Necklace& b) { return a.rep_ == b.rep_; }
  friend std::strong_ordering operator<=>(const Necklace& a, const Necklace& b) {
    return a.rep_ <=> b.rep_;
  }

 private:
  Necklace(Word w, int) : rep_(w) {}
  Word rep_;
};

inline Necklace necklace_canon(Word w) { return Necklace(w); }

// Number of degree-n necklaces: (1/n) sum_{d|n} phi(d) 2^{n/d}.
unsigned long long necklace_dim(int n);

// All degree-n necklaces in lexicographic order of their representatives. Cached.
const std::vector<Necklace>& necklace_basis(int n);

// Position of v in necklace_basis(v.size()), or -1 when absent.
int necklace_index(const Necklace& v);

}  // namespace kva
