#include "kva/lie_elt.hpp"

#include <mutex>
#include <shared_mutex>
#include <utility>

#include "kva/lyndon.hpp"

namespace kva {

namespace {

using HomogLie = std::map<Word, Rational>;    // Lyndon word -> coefficient
using HomogAssoc = std::map<Word, Rational>;  // plain word -> coefficient

struct BracketCache {
  std::shared_mutex mutex;
  std::map<std::pair<std::uint64_t, std::uint64_t>, HomogLie> pairs;
};

struct ExpandCache {
  std::shared_mutex mutex;
  std::map<std::uint64_t, HomogAssoc> words;
};

struct SwapCache {
  std::shared_mutex mutex;
  std::map<std::uint64_t, HomogLie> words;
};

BracketCache& bracket_cache() {
  static BracketCache c;
  return c;
}
ExpandCache& expand_cache() {
  static ExpandCache c;
  return c;
}
SwapCache& swap_cache() {
  static SwapCache c;
  return c;
}

void accumulate(HomogLie& into, const HomogLie& from, const Rational& scale) {
  if (scale.is_zero()) return;
  for (const auto& [w, c] : from) {
    auto it = into.find(w);
    if (it == into.end()) {
      into.emplace(w, c * scale);
    } else {
      it->second += c * scale;
      if (it->second.is_zero()) into.erase(it);
    }
  }
}

const HomogLie& bracket_basis(Word u, Word v);

// [P_u, acc] for a Lyndon word u and a homogeneous combination acc.
HomogLie bracket_word_homog(Word u, const HomogLie& acc) {
  HomogLie out;
  for (const auto& [w, c] : acc) {
    if (u == w) continue;
    if (lex_less(u, w)) {
      accumulate(out, bracket_basis(u, w), c);
    } else {
      accumulate(out, bracket_basis(w, u), -c);
    }
  }
  return out;
}

// Rewrites [P_u, P_v] for Lyndon words u < v into Lyndon coordinates. When
// (u, v) is the standard factorization of uv this is the basis element uv;
// otherwise u = u1 u2 with u2 < v and Jacobi reduces to strictly smaller cases.
const HomogLie& bracket_basis(Word u, Word v) {
  const std::pair<std::uint64_t, std::uint64_t> key{u.key(), v.key()};
  auto& cache = bracket_cache();
  {
    std::shared_lock lock(cache.mutex);
    auto it = cache.pairs.find(key);
    if (it != cache.pairs.end()) return it->second;
  }
  HomogLie result;
  Word right;
  if (u.size() >= 2) right = std_right_factor(u);
  if (u.size() == 1 || !lex_less(right, v)) {
    result.emplace(Word::concat(u, v), Rational(1));
  } else {
    const Word left = u.prefix(u.size() - right.size());
    result = bracket_word_homog(left, bracket_basis(right, v));
    accumulate(result, bracket_word_homog(right, bracket_basis(left, v)), Rational(-1));
  }
  std::unique_lock lock(cache.mutex);
  auto [it, inserted] = cache.pairs.emplace(key, std::move(result));
  return it->second;
}

HomogAssoc homog_mul(const HomogAssoc& a, const HomogAssoc& b) {
  HomogAssoc out;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) {
      const Word w = Word::concat(wa, wb);
      auto it = out.find(w);
      if (it == out.end()) {
        out.emplace(w, ca * cb);
      } else {
        it->second += ca * cb;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  return out;
}

// Commutator expansion of the basis element of a Lyndon word.
const HomogAssoc& expansion(Word w) {
  auto& cache = expand_cache();
  {
    std::shared_lock lock(cache.mutex);
    auto it = cache.words.find(w.key());
    if (it != cache.words.end()) return it->second;
  }
  HomogAssoc result;
  if (w.size() == 1) {
    result.emplace(w, Rational(1));
  } else {
    const Word right = std_right_factor(w);
    const Word left = w.prefix(w.size() - right.size());
    const HomogAssoc lr = homog_mul(expansion(left), expansion(right));
    const HomogAssoc rl = homog_mul(expansion(right), expansion(left));
    result = lr;
    for (const auto& [word, c] : rl) {
      auto it = result.find(word);
      if (it == result.end()) {
        result.emplace(word, -c);
      } else {
        it->second -= c;
        if (it->second.is_zero()) result.erase(it);
      }
    }
  }
  std::unique_lock lock(cache.mutex);
  auto [it, inserted] = cache.words.emplace(w.key(), std::move(result));
  return it->second;
}

// Image of a basis element under the letter exchange, renormalized.
const HomogLie& swap_image(Word w) {
  auto& cache = swap_cache();
  {
    std::shared_lock lock(cache.mutex);
    auto it = cache.words.find(w.key());
    if (it != cache.words.end()) return it->second;
  }
  HomogLie result;
  if (w.size() == 1) {
    result.emplace(Word::single(w.first_letter() == 1 ? 2 : 1), Rational(1));
  } else {
    const Word right = std_right_factor(w);
    const Word left = w.prefix(w.size() - right.size());
    const HomogLie li = swap_image(left);
    const HomogLie ri = swap_image(right);
    for (const auto& [wl, cl] : li)
      for (const auto& [wr, cr] : ri) {
        if (wl == wr) continue;
        if (lex_less(wl, wr)) {
          accumulate(result, bracket_basis(wl, wr), cl * cr);
        } else {
          accumulate(result, bracket_basis(wr, wl), -(cl * cr));
        }
      }
  }
  std::unique_lock lock(cache.mutex);
  auto [it, inserted] = cache.words.emplace(w.key(), std::move(result));
  return it->second;
}

// Left-normed bracketing of the letters of w, in Lyndon coordinates.
HomogLie theta(Word w) {
  HomogLie cur;
  cur.emplace(Word::single(w.letter(0)), Rational(1));
  for (int i = 1; i < w.size(); ++i) {
    const Word letter = Word::single(w.letter(i));
    HomogLie next;
    for (const auto& [t, c] : cur) {
      if (t == letter) continue;
      if (lex_less(t, letter)) {
        accumulate(next, bracket_basis(t, letter), c);
      } else {
        accumulate(next, bracket_basis(letter, t), -c);
      }
    }
    cur = std::move(next);
    if (cur.empty()) break;
  }
  return cur;
}

}  // namespace

LieElt::LieElt(int max_degree) : max_degree_(max_degree) {
  if (max_degree < 1 || max_degree > Word::kMaxLen)
    throw std::invalid_argument("LieElt: bad truncation degree");
}

LieElt LieElt::generator(int letter, int max_degree) {
  LieElt e(max_degree);
  e.add_term(Word::single(letter), Rational(1));
  return e;
}

LieElt LieElt::x_plus_y(int max_degree) {
  LieElt e(max_degree);
  e.add_term(Word::single(1), Rational(1));
  e.add_term(Word::single(2), Rational(1));
  return e;
}

int LieElt::min_degree() const { return comps_.empty() ? 0 : comps_.begin()->first; }

Rational LieElt::coeff(Word lyndon) const {
  auto dit = comps_.find(lyndon.size());
  if (dit == comps_.end()) return Rational(0);
  auto it = dit->second.find(lyndon);
  return it == dit->second.end() ? Rational(0) : it->second;
}

LieElt LieElt::degree_part(int n) const {
  LieElt r(max_degree_);
  auto dit = comps_.find(n);
  if (dit != comps_.end()) r.comps_.emplace(n, dit->second);
  return r;
}

LieElt LieElt::truncated(int max_degree) const {
  LieElt r(max_degree);
  for (const auto& [deg, terms] : comps_) {
    if (deg > max_degree) break;
    r.comps_.emplace(deg, terms);
  }
  return r;
}

void LieElt::add_term(Word w, const Rational& c) {
  if (c.is_zero() || w.size() > max_degree_) return;
  if (lyndon_index(w) < 0)
    throw std::invalid_argument("LieElt: key is not a Lyndon word: " + w.str());
  auto& terms = comps_[w.size()];
  auto it = terms.find(w);
  if (it == terms.end()) {
    terms.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) {
    terms.erase(it);
    if (terms.empty()) comps_.erase(w.size());
  }
}

LieElt& LieElt::operator+=(const LieElt& o) {
  if (o.max_degree_ > max_degree_) max_degree_ = o.max_degree_;
  for (const auto& [deg, terms] : o.comps_)
    for (const auto& [w, c] : terms) add_term(w, c);
  return *this;
}

LieElt& LieElt::operator-=(const LieElt& o) {
  if (o.max_degree_ > max_degree_) max_degree_ = o.max_degree_;
  for (const auto& [deg, terms] : o.comps_)
    for (const auto& [w, c] : terms) add_term(w, -c);
  return *this;
}

LieElt& LieElt::operator*=(const Rational& s) {
  if (s.is_zero()) {
    comps_.clear();
    return *this;
  }
  for (auto& [deg, terms] : comps_)
    for (auto& [w, c] : terms) c *= s;
  return *this;
}

LieElt LieElt::operator-() const {
  LieElt r = *this;
  r *= Rational(-1);
  return r;
}

LieElt lie_bracket(const LieElt& a, const LieElt& b, int max_degree) {
  LieElt r(max_degree);
  for (const auto& [da, ta] : a.components()) {
    if (da >= max_degree) break;
    for (const auto& [db, tb] : b.components()) {
      if (da + db > max_degree) break;
      for (const auto& [wa, ca] : ta)
        for (const auto& [wb, cb] : tb) {
          if (wa == wb) continue;
          const bool ordered = lex_less(wa, wb);
          const HomogLie& res = ordered ? bracket_basis(wa, wb) : bracket_basis(wb, wa);
          const Rational scale = ordered ? ca * cb : -(ca * cb);
          for (const auto& [w, c] : res) r.add_term(w, c * scale);
        }
    }
  }
  return r;
}

AssocPoly lie_to_assoc(const LieElt& e) {
  AssocPoly r(e.max_degree());
  for (const auto& [deg, terms] : e.components())
    for (const auto& [w, c] : terms)
      for (const auto& [word, wc] : expansion(w)) r.add_term(word, c * wc);
  return r;
}

LieElt dynkin_to_lie(const AssocPoly& a) {
  const int max_degree = std::max(a.max_degree(), 1);
  LieElt r(max_degree);
  for (const auto& [deg, terms] : a.parts()) {
    if (deg == 0) throw not_lie_error(0);
    const Rational inv_deg(1, deg);
    HomogLie acc;
    for (const auto& [w, c] : terms) accumulate(acc, theta(w), c);
    for (const auto& [w, c] : acc) r.add_term(w, c * inv_deg);
  }
  const AssocPoly back = lie_to_assoc(r);
  if (!(back == a)) {
    int bad = -1;
    for (int deg = 1; deg <= max_degree; ++deg) {
      if (!(back.degree_slice(deg) == a.degree_slice(deg))) {
        bad = deg;
        break;
      }
    }
    throw not_lie_error(bad);
  }
  return r;
}

LieElt substitute(const LieElt& e, SubstMode mode) {
  LieElt r(e.max_degree());
  for (const auto& [deg, terms] : e.components()) {
    const bool negate =
        (mode != SubstMode::swap) && (deg % 2 == 1);  // (-1)^deg per component
    for (const auto& [w, c] : terms) {
      const Rational scale = negate ? -c : c;
      if (mode == SubstMode::negate_both) {
        r.add_term(w, scale);
      } else {
        for (const auto& [sw, sc] : swap_image(w)) r.add_term(sw, sc * scale);
      }
    }
  }
  return r;
}

LieElt ad_apply(const USeries& series, const LieElt& w, const LieElt& target,
                int max_degree) {
  LieElt acc(max_degree);
  LieElt cur = target.truncated(max_degree);
  acc += series.coeff(0) * cur;
  for (int k = 1; k <= series.order(); ++k) {
    cur = lie_bracket(w, cur, max_degree);
    if (cur.is_zero()) break;
    acc += series.coeff(k) * cur;
  }
  return acc;
}

}  // namespace kva
