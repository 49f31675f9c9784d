#pragma once

// Exact Laurent-polynomial arithmetic over the integers, in one or two
// variables.  Coefficients are arbitrary-precision (boost cpp_int); the
// representation is a sparse exponent -> coefficient map with no stored
// zero coefficients.

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <cctype>
#include <cstddef>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace slopekit {

using Int = boost::multiprecision::cpp_int;

struct not_divisible_error : std::runtime_error {
  explicit not_divisible_error(const std::string& what) : std::runtime_error(what) {}
};

struct poly_parse_error : std::runtime_error {
  explicit poly_parse_error(const std::string& what) : std::runtime_error(what) {}
};

template <std::size_t N>
class LaurentPoly {
 public:
  using Exponent = std::array<int, N>;
  using Terms = std::map<Exponent, Int>;

  LaurentPoly() = default;

  static LaurentPoly zero() { return LaurentPoly(); }

  static LaurentPoly constant(Int c) {
    LaurentPoly p;
    p.add_term(Exponent{}, std::move(c));
    return p;
  }

  static LaurentPoly monomial(Int c, Exponent e) {
    LaurentPoly p;
    p.add_term(e, std::move(c));
    return p;
  }

  // Single variable raised to a power (N==1 convenience).
  static LaurentPoly var_power(int k)
    requires(N == 1)
  {
    return monomial(1, Exponent{k});
  }

  bool is_zero() const { return terms_.empty(); }

  const Terms& terms() const { return terms_; }

  Int coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Int(0) : it->second;
  }

  void add_term(const Exponent& e, Int c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, std::move(c));
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::size_t term_count() const { return terms_.size(); }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
  }

  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
    return r;
  }

  LaurentPoly operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponent e;
        for (std::size_t i = 0; i < N; ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }

  friend LaurentPoly operator*(const Int& s, const LaurentPoly& a) {
    LaurentPoly r;
    if (s == 0) return r;
    for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, s * c);
    return r;
  }

  LaurentPoly& operator+=(const LaurentPoly& b) { return *this = *this + b; }
  LaurentPoly& operator-=(const LaurentPoly& b) { return *this = *this - b; }
  LaurentPoly& operator*=(const LaurentPoly& b) { return *this = *this * b; }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.terms_ == b.terms_;
  }

  // Componentwise minimum/maximum exponent over the support.
  Exponent min_exponent() const {
    Exponent m{};
    bool first = true;
    for (const auto& [e, c] : terms_) {
      for (std::size_t i = 0; i < N; ++i)
        m[i] = first ? e[i] : std::min(m[i], e[i]);
      first = false;
    }
    return m;
  }

  Exponent max_exponent() const {
    Exponent m{};
    bool first = true;
    for (const auto& [e, c] : terms_) {
      for (std::size_t i = 0; i < N; ++i)
        m[i] = first ? e[i] : std::max(m[i], e[i]);
      first = false;
    }
    return m;
  }

  LaurentPoly shifted(const Exponent& by) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) {
      Exponent e2;
      for (std::size_t i = 0; i < N; ++i) e2[i] = e[i] + by[i];
      r.terms_.emplace(e2, c);
    }
    return r;
  }

 private:
  Terms terms_;
};

using LPoly1 = LaurentPoly<1>;
using LPoly2 = LaurentPoly<2>;

// ---------------------------------------------------------------------------
// Substitution and variable inversion

// Replace the selected variable of a two-variable polynomial by t^d and the
// other variable by t; exponents combine additively.
inline LPoly1 substitute_power(const LPoly2& p, std::size_t which, int d) {
  LPoly1 r;
  for (const auto& [e, c] : p.terms()) {
    int te = (which == 1) ? e[0] + e[1] * d : e[0] * d + e[1];
    r.add_term({te}, c);
  }
  return r;
}

// Replace each selected variable v by v^-1 (exponent negation).
template <std::size_t N>
LaurentPoly<N> invert_vars(const LaurentPoly<N>& p, std::array<bool, N> which) {
  LaurentPoly<N> r;
  for (const auto& [e, c] : p.terms()) {
    typename LaurentPoly<N>::Exponent e2 = e;
    for (std::size_t i = 0; i < N; ++i)
      if (which[i]) e2[i] = -e2[i];
    r.add_term(e2, c);
  }
  return r;
}

inline LPoly2 invert_y(const LPoly2& p) { return invert_vars<2>(p, {false, true}); }

// Sum of coeff * value^exponent for value in {1, -1}.
inline Int evaluate_at_unit(const LPoly1& p, int value) {
  if (value != 1 && value != -1)
    throw std::invalid_argument("evaluate_at_unit: value must be +1 or -1");
  Int s = 0;
  for (const auto& [e, c] : p.terms())
    s += (value == 1 || e[0] % 2 == 0) ? c : -c;
  return s;
}

// ---------------------------------------------------------------------------
// Unit normal form

// p == sign * x^unit_exp * normal_form, where the normal form has minimal
// exponent 0 in each variable and positive lexicographically-first
// coefficient.  Two polynomials agree up to units (+- a monomial) iff their
// normal forms are identical; canonicalization is idempotent.
template <std::size_t N>
struct UnitNormalForm {
  LaurentPoly<N> normal_form;
  int sign = 1;
  typename LaurentPoly<N>::Exponent unit_exp{};
};

template <std::size_t N>
UnitNormalForm<N> normalize_units(const LaurentPoly<N>& p) {
  UnitNormalForm<N> r;
  if (p.is_zero()) return r;
  r.unit_exp = p.min_exponent();
  typename LaurentPoly<N>::Exponent neg;
  for (std::size_t i = 0; i < N; ++i) neg[i] = -r.unit_exp[i];
  r.normal_form = p.shifted(neg);
  if (r.normal_form.terms().begin()->second < 0) {
    r.sign = -1;
    r.normal_form = -r.normal_form;
  }
  return r;
}

template <std::size_t N>
bool equal_up_to_units(const LaurentPoly<N>& a, const LaurentPoly<N>& b) {
  return normalize_units(a).normal_form == normalize_units(b).normal_form;
}

// ---------------------------------------------------------------------------
// Symmetrization (Alexander-polynomial convention)

// Recenter exponents so the support is symmetric about 0.  For one variable
// the sign is fixed so the value at 1 is positive (falling back to a positive
// lex-first coefficient); for two variables the lex-first coefficient is made
// positive.  If a variable's exponent spread is odd, perfect centering is
// impossible and the unit normal form is returned instead.
template <std::size_t N>
LaurentPoly<N> symmetrized(const LaurentPoly<N>& p) {
  if (p.is_zero()) return p;
  auto lo = p.min_exponent();
  auto hi = p.max_exponent();
  for (std::size_t i = 0; i < N; ++i)
    if ((hi[i] - lo[i]) % 2 != 0) return normalize_units(p).normal_form;
  typename LaurentPoly<N>::Exponent shift;
  for (std::size_t i = 0; i < N; ++i) shift[i] = -(hi[i] + lo[i]) / 2;
  LaurentPoly<N> r = p.shifted(shift);
  bool flip;
  if constexpr (N == 1) {
    Int at_one = 0;
    for (const auto& [e, c] : r.terms()) at_one += c;
    flip = at_one != 0 ? at_one < 0 : r.terms().begin()->second < 0;
  } else {
    flip = r.terms().begin()->second < 0;
  }
  return flip ? -r : r;
}

// ---------------------------------------------------------------------------
// Exact division

// Returns r with p == q * r exactly; throws not_divisible_error otherwise.
template <std::size_t N>
LaurentPoly<N> exact_divide(const LaurentPoly<N>& p, const LaurentPoly<N>& q) {
  if (q.is_zero()) throw std::invalid_argument("exact_divide: divisor is zero");
  if (p.is_zero()) return LaurentPoly<N>();

  // Shift both operands to nonnegative exponents.  In an integral domain the
  // componentwise minimal exponent is additive under multiplication, so the
  // shifted quotient has nonnegative exponents too and ordinary multivariate
  // long division (lex leading terms) applies.
  auto mp = p.min_exponent();
  auto mq = q.min_exponent();
  typename LaurentPoly<N>::Exponent sp, sq, back;
  for (std::size_t i = 0; i < N; ++i) {
    sp[i] = -mp[i];
    sq[i] = -mq[i];
    back[i] = mp[i] - mq[i];
  }
  LaurentPoly<N> rem = p.shifted(sp);
  LaurentPoly<N> div = q.shifted(sq);
  auto lead_div = *div.terms().rbegin();

  LaurentPoly<N> quot;
  while (!rem.is_zero()) {
    auto lead_rem = *rem.terms().rbegin();
    typename LaurentPoly<N>::Exponent e;
    for (std::size_t i = 0; i < N; ++i) {
      e[i] = lead_rem.first[i] - lead_div.first[i];
      if (e[i] < 0) throw not_divisible_error("exact_divide: monomial obstruction");
    }
    Int c = lead_rem.second / lead_div.second;
    if (c * lead_div.second != lead_rem.second)
      throw not_divisible_error("exact_divide: coefficient obstruction");
    auto t = LaurentPoly<N>::monomial(c, e);
    quot += t;
    rem -= t * div;
  }
  return quot.shifted(back);
}

// ---------------------------------------------------------------------------
// Text format: sorted term list like `-1*t^-2 + 2*t^-1 - 1 + 2*t - 1*t^2`,
// two-variable terms as `c*x^a*y^b`.

namespace detail {

inline void append_var_power(std::ostream& os, const std::string& var, int e) {
  os << '*' << var;
  if (e != 1) os << '^' << e;
}

}  // namespace detail

template <std::size_t N>
std::string to_string(const LaurentPoly<N>& p,
                      const std::array<std::string, N>& vars) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    Int mag = c < 0 ? Int(-c) : c;
    if (first) {
      if (c < 0) os << '-';
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    os << mag.str();
    for (std::size_t i = 0; i < N; ++i)
      if (e[i] != 0) detail::append_var_power(os, vars[i], e[i]);
  }
  return os.str();
}

inline std::string to_string(const LPoly1& p, const std::string& var = "t") {
  return to_string<1>(p, {var});
}

inline std::string to_string_xy(const LPoly2& p) {
  return to_string<2>(p, {"x", "y"});
}

namespace detail {

struct PolyLexer {
  const std::string& s;
  std::size_t i = 0;

  explicit PolyLexer(const std::string& text) : s(text) {}

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  Int integer() {
    skip_ws();
    std::size_t start = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    std::size_t digits = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == digits) throw poly_parse_error("expected integer at '" + s.substr(start) + "'");
    return Int(s.substr(start, i - start));
  }
  int small_integer() {
    Int v = integer();
    if (v > 1000000 || v < -1000000) throw poly_parse_error("exponent out of range");
    return static_cast<int>(v);
  }
};

}  // namespace detail

// Parses the sorted-term-list text format.  Accepts `1*t^2`, `t^2`, `-t`,
// bare integers, and `c*x^a*y^b` style terms; term order is not significant.
template <std::size_t N>
LaurentPoly<N> parse_poly(const std::string& text,
                          const std::array<std::string, N>& vars) {
  detail::PolyLexer lx(text);
  LaurentPoly<N> p;
  bool any = false;
  while (!lx.done()) {
    int sign = 1;
    if (lx.eat('-'))
      sign = -1;
    else if (lx.eat('+'))
      sign = 1;
    else if (any)
      throw poly_parse_error("expected '+' or '-' between terms");
    Int coeff = 1;
    bool saw_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
      coeff = lx.integer();
      saw_coeff = true;
    }
    typename LaurentPoly<N>::Exponent exp{};
    bool saw_var = false;
    for (;;) {
      if (saw_coeff || saw_var) {
        if (!lx.eat('*')) break;
      }
      lx.skip_ws();
      std::size_t vi = N;
      for (std::size_t k = 0; k < N; ++k) {
        const std::string& v = vars[k];
        if (lx.s.compare(lx.i, v.size(), v) == 0) {
          vi = k;
          break;
        }
      }
      if (vi == N) {
        if (saw_coeff || saw_var) throw poly_parse_error("expected variable after '*'");
        break;
      }
      lx.i += vars[vi].size();
      int e = 1;
      if (lx.eat('^')) e = lx.small_integer();
      exp[vi] += e;
      saw_var = true;
    }
    if (!saw_coeff && !saw_var) throw poly_parse_error("empty term");
    p.add_term(exp, sign * coeff);
    any = true;
  }
  if (!any) throw poly_parse_error("empty polynomial text");
  return p;
}

inline LPoly1 parse_poly1(const std::string& text, const std::string& var = "t") {
  // "0" is the zero polynomial, which the term grammar cannot express.
  detail::PolyLexer probe(text);
  if (probe.peek() == '0') {
    probe.eat('0');
    if (probe.done()) return LPoly1();
  }
  return parse_poly<1>(text, {var});
}

inline LPoly2 parse_poly2(const std::string& text) {
  detail::PolyLexer probe(text);
  if (probe.peek() == '0') {
    probe.eat('0');
    if (probe.done()) return LPoly2();
  }
  return parse_poly<2>(text, {"x", "y"});
}

}  // namespace slopekit
