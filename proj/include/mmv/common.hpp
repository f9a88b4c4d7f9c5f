// Shared exact-arithmetic helpers, error types, and the LinComb container.
#pragma once

#include <gmpxx.h>

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mmv {

using Q = mpq_class;
using Z = mpz_class;

/// Raised for inputs outside an operation's domain (non-admissible, bad arity, ...).
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Raised by the expression parser, carries the byte offset of the failure.
struct ParseError : std::runtime_error {
  std::size_t pos;
  ParseError(const std::string& msg, std::size_t p)
      : std::runtime_error(msg + " at offset " + std::to_string(p)), pos(p) {}
};

Q binomial(long n, long k);
Q factorial(long n);
Q pow2(long e);  // 2^e, e may be negative
std::string q_str(const Q& q);

/// Formal finite linear combination with exact rational coefficients.
/// Zero coefficients are never stored.
template <class B, class Cmp = std::less<B>>
class LinComb {
 public:
  using map_type = std::map<B, Q, Cmp>;
  using const_iterator = typename map_type::const_iterator;

  LinComb() = default;
  explicit LinComb(const B& b, const Q& c = Q(1)) { add(b, c); }

  void add(const B& b, const Q& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(b, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  Q coeff(const B& b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? Q(0) : it->second;
  }

  LinComb& operator+=(const LinComb& o) {
    for (const auto& [b, c] : o.terms_) add(b, c);
    return *this;
  }
  LinComb& operator-=(const LinComb& o) {
    for (const auto& [b, c] : o.terms_) add(b, -c);
    return *this;
  }
  LinComb& operator*=(const Q& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& kv : terms_) kv.second *= s;
    return *this;
  }
  void add_scaled(const LinComb& o, const Q& s) {
    if (s == 0) return;
    for (const auto& [b, c] : o.terms_) add(b, c * s);
  }

  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator*(LinComb a, const Q& s) { return a *= s; }
  friend LinComb operator*(const Q& s, LinComb a) { return a *= s; }
  LinComb operator-() const { return LinComb(*this) *= Q(-1); }

  bool operator==(const LinComb& o) const { return terms_ == o.terms_; }
  bool operator!=(const LinComb& o) const { return !(*this == o); }

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const map_type& terms() const { return terms_; }

  /// Sum of all coefficients.
  Q mass() const {
    Q s = 0;
    for (const auto& kv : terms_) s += kv.second;
    return s;
  }

  /// Linear extension of f: B -> LinComb<B2>.
  template <class Out, class F>
  Out map_linear(F&& f) const {
    Out r;
    for (const auto& [b, c] : terms_) r.add_scaled(f(b), c);
    return r;
  }

 private:
  map_type terms_;
};

}  // namespace mmv
