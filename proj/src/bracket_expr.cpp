#include "kva/bracket_expr.hpp"

#include <cctype>

#include "kva/lyndon.hpp"

namespace kva {

BracketExpr BracketExpr::leaf(int letter) {
  BracketExpr e;
  e.letter_ = letter;
  return e;
}

BracketExpr BracketExpr::node(BracketExpr left, BracketExpr right) {
  BracketExpr e;
  e.left_ = std::make_shared<BracketExpr>(std::move(left));
  e.right_ = std::make_shared<BracketExpr>(std::move(right));
  return e;
}

int BracketExpr::degree() const {
  return is_leaf() ? 1 : left_->degree() + right_->degree();
}

LieElt BracketExpr::to_lie() const {
  if (is_leaf()) return LieElt::generator(letter_, 1);
  const LieElt l = left_->to_lie();
  const LieElt r = right_->to_lie();
  return lie_bracket(l, r, degree());
}

std::string BracketExpr::str() const {
  if (is_leaf()) return letter_ == 1 ? "x" : "y";
  return "[" + left_->str() + "," + right_->str() + "]";
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  LieElt parse() {
    std::vector<std::pair<Rational, BracketExpr>> terms;
    skip_ws();
    bool first = true;
    while (true) {
      skip_ws();
      if (pos_ == text_.size()) {
        if (first) throw parse_error("empty expression", pos_);
        break;
      }
      Rational sign(1);
      if (peek() == '+' || peek() == '-') {
        if (peek() == '-') sign = Rational(-1);
        ++pos_;
      } else if (!first) {
        throw parse_error("expected '+' or '-' between terms", pos_);
      }
      skip_ws();
      Rational coeff(1);
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(peek()))) {
        coeff = parse_rational();
        skip_ws();
        if (pos_ < text_.size() && peek() == '*') {
          ++pos_;
          skip_ws();
        } else if (pos_ < text_.size() && (peek() == '[' || is_generator(peek()))) {
          throw parse_error("expected '*' after coefficient", pos_);
        } else {
          throw parse_error("coefficient without bracket term", pos_);
        }
      }
      BracketExpr expr = parse_monomial();
      terms.emplace_back(sign * coeff, std::move(expr));
      first = false;
    }
    int max_degree = 1;
    for (const auto& [c, e] : terms) max_degree = std::max(max_degree, e.degree());
    LieElt out(max_degree);
    for (const auto& [c, e] : terms) {
      LieElt t = e.to_lie();
      t *= c;
      out += t.truncated(max_degree);
    }
    return out;
  }

 private:
  static bool is_generator(char c) { return c == 'x' || c == 'y' || c == 'X' || c == 'Y'; }

  char peek() const { return text_[pos_]; }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  Rational parse_rational() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    mpz_class num{std::string(text_.substr(start, pos_ - start))};
    skip_ws();
    if (pos_ < text_.size() && peek() == '/') {
      ++pos_;
      skip_ws();
      const std::size_t dstart = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (dstart == pos_) throw parse_error("expected denominator digits", pos_);
      mpz_class den{std::string(text_.substr(dstart, pos_ - dstart))};
      if (den == 0) throw parse_error("zero denominator", dstart);
      return Rational(num, den);
    }
    return Rational(num, mpz_class(1));
  }

  BracketExpr parse_monomial() {
    skip_ws();
    if (pos_ == text_.size()) throw parse_error("expected bracket term", pos_);
    const char c = peek();
    if (is_generator(c)) {
      ++pos_;
      return BracketExpr::leaf((c == 'x' || c == 'X') ? 1 : 2);
    }
    if (c != '[') throw parse_error("expected 'x', 'y' or '['", pos_);
    ++pos_;
    BracketExpr left = parse_monomial();
    skip_ws();
    if (pos_ == text_.size() || peek() != ',') throw parse_error("expected ','", pos_);
    ++pos_;
    BracketExpr right = parse_monomial();
    skip_ws();
    if (pos_ == text_.size() || peek() != ']') throw parse_error("expected ']'", pos_);
    ++pos_;
    return BracketExpr::node(std::move(left), std::move(right));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

LieElt parse_bracket(std::string_view text) { return Parser(text).parse(); }

std::string bracket_monomial_str(Word lyndon) {
  if (lyndon.size() == 1) return lyndon.first_letter() == 1 ? "x" : "y";
  const int idx = lyndon_index(lyndon);
  if (idx < 0) throw std::invalid_argument("bracket_monomial_str: not a Lyndon word");
  const LyndonWord& lw = lyndon_basis(lyndon.size())[static_cast<std::size_t>(idx)];
  return "[" + bracket_monomial_str(lw.left) + "," + bracket_monomial_str(lw.right) + "]";
}

std::string print_bracket(const LieElt& e) {
  if (e.is_zero()) return "0";
  std::string out;
  for (const auto& [deg, terms] : e.components()) {
    for (const auto& [w, c] : terms) {
      const bool negative = c.sign() < 0;
      const Rational mag = negative ? -c : c;
      if (out.empty()) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      if (mag != Rational(1)) out += mag.str() + "*";
      out += bracket_monomial_str(w);
    }
  }
  return out;
}

}  // namespace kva
