#include "cumulant/closed_form.hpp"

#include <algorithm>
#include <cctype>

#include "cumulant/errors.hpp"

namespace cumulant {

namespace {

constexpr std::string_view kLetters = "xyzw";

int letter_index(char c) {
  const auto pos = kLetters.find(c);
  return pos == std::string_view::npos ? -1 : static_cast<int>(pos);
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  std::vector<ClosedForm::Term> terms() {
    std::vector<ClosedForm::Term> out;
    skip_space();
    while (pos_ < text_.size()) {
      out.push_back(term(out.empty()));
      skip_space();
    }
    if (out.empty()) fail("empty expression");
    return out;
  }

 private:
  ClosedForm::Term term(bool first) {
    ClosedForm::Term t{Scalar(1), {}};
    if (peek() == '+' || peek() == '-') {
      if (text_[pos_++] == '-') t.coeff = -1;
      skip_space();
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    std::string digits;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) digits += text_[pos_++];
    if (!digits.empty()) t.coeff *= parse_scalar(digits);
    skip_space();
    while (pos_ < text_.size() && peek() != '+' && peek() != '-') {
      t.factors.push_back(factor());
      skip_space();
    }
    if (t.factors.empty()) fail("term without factors");
    return t;
  }

  ClosedForm::Factor factor() {
    ClosedForm::Factor f;
    if (peek() == 'f') {
      ++pos_;
      if (peek() != '(') fail("expected '(' after f");
      ++pos_;
      f.applied = true;
      while (peek() != ')') {
        if (pos_ >= text_.size()) fail("unterminated f(");
        f.letters.push_back(letter(text_[pos_++]));
      }
      ++pos_;
      if (f.letters.empty()) fail("f() without arguments");
    } else {
      f.letters.push_back(letter(text_[pos_++]));
    }
    return f;
  }

  int letter(char c) {
    const int i = letter_index(c);
    if (i < 0) fail(std::string("unexpected character '") + c + "'");
    return i;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw SchemaError("closed form '" + std::string(text_) + "': " + why + " at offset " + std::to_string(pos_));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ClosedForm ClosedForm::parse(std::string_view text) {
  ClosedForm form;
  form.text_ = std::string(text);
  form.terms_ = Parser(text).terms();
  for (const auto& t : form.terms_) {
    std::vector<int> letters;
    for (const auto& f : t.factors) letters.insert(letters.end(), f.letters.begin(), f.letters.end());
    std::sort(letters.begin(), letters.end());
    const int n = static_cast<int>(letters.size());
    for (int i = 0; i < n; ++i) {
      if (letters[i] != i) throw SchemaError("closed form '" + form.text_ + "': each term must use x, y, ... once");
    }
    if (form.arity_ == 0) form.arity_ = n;
    if (form.arity_ != n) throw SchemaError("closed form '" + form.text_ + "': terms have different arities");
  }
  return form;
}

Vector ClosedForm::evaluate(const Algebra& source, const Algebra& target, const LinearMap& f,
                            std::span<const int> args) const {
  if (static_cast<int>(args.size()) != arity_) throw MismatchError("closed form: wrong number of arguments");
  const GradedSpace& space = *source.space();
  std::vector<int> degrees;
  for (int g : args) degrees.push_back(space.degree(g));

  Vector total;
  for (const auto& term : terms_) {
    std::vector<int> order;
    int sign = 1;
    int preceding = 0;
    Vector value;
    bool started = false;
    for (const auto& factor : term.factors) {
      Vector product = basis_vector(args[factor.letters.front()]);
      for (std::size_t i = 1; i < factor.letters.size(); ++i) {
        product = source.multiply(product, basis_vector(args[factor.letters[i]]));
      }
      if (factor.applied) {
        sign *= koszul_factor(f.degree(), preceding);
        product = f.apply(product);
      } else if (!same_space(source.space(), target.space())) {
        throw MismatchError("closed form: bare letters need f to be an endomorphism");
      }
      for (int l : factor.letters) {
        order.push_back(l);
        preceding += degrees[l];
      }
      value = started ? target.multiply(value, product) : product;
      started = true;
    }
    sign *= koszul_sign(degrees, order);
    total.add_scaled(value, term.coeff * sign);
  }
  return total;
}

ClosedFormComparison compare_closed_form(const ClosedForm& form, const TaylorTable& computed, const Algebra& source,
                                         const Algebra& target, const LinearMap& f, int cap) {
  ClosedFormComparison result{form.text()};
  const SymmetricCoalgebra coalgebra(source.space(), std::max(cap, form.arity()));
  for (const auto& m : coalgebra.monomials(form.arity())) {
    ++result.checked;
    auto it = computed.find(m);
    Vector have = it == computed.end() ? Vector{} : it->second;
    Vector expected = form.evaluate(source, target, f, m.factors);
    if (!(have == expected)) result.mismatches.push_back({m, std::move(have), std::move(expected)});
  }
  return result;
}

}  // namespace cumulant
