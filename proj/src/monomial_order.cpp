#include "nestconf/monomial_order.h"

#include <numeric>
#include <stdexcept>

namespace nestconf {

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const std::vector<Rational>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += v[i].get_str();
  }
  return s + ')';
}

MonomialOrder::MonomialOrder(OrderKind kind, std::size_t n) : kind_(kind), priority_(n) {
  std::iota(priority_.begin(), priority_.end(), std::size_t{0});
}

MonomialOrder MonomialOrder::lex(std::size_t n) { return {OrderKind::Lex, n}; }
MonomialOrder MonomialOrder::graded_lex(std::size_t n) { return {OrderKind::GradedLex, n}; }
MonomialOrder MonomialOrder::graded_revlex(std::size_t n) { return {OrderKind::GradedRevLex, n}; }

MonomialOrder MonomialOrder::weighted(std::vector<Rational> weights, OrderKind tiebreak) {
  if (tiebreak == OrderKind::Weight) throw std::invalid_argument("weight order needs a non-weight tiebreak");
  MonomialOrder o(OrderKind::Weight, weights.size());
  o.tiebreak_ = tiebreak;
  Integer den = 1;
  for (auto& w : weights) {
    w.canonicalize();
    if (sgn(w) < 0) throw std::invalid_argument("weight orders require nonnegative weights");
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), w.get_den_mpz_t());
  }
  for (const auto& w : weights) {
    Integer scaled = w.get_num() * (den / w.get_den());
    if (!scaled.fits_slong_p()) throw std::overflow_error("weight vector too large");
    o.integer_weights_.push_back(scaled.get_si());
  }
  o.weights_ = std::move(weights);
  return o;
}

MonomialOrder MonomialOrder::with_priority(std::vector<std::size_t> priority) const {
  std::vector<bool> seen(size(), false);
  if (priority.size() != size()) throw std::invalid_argument("priority list has wrong length");
  for (auto p : priority) {
    if (p >= size() || seen[p]) throw std::invalid_argument("priority list is not a permutation");
    seen[p] = true;
  }
  MonomialOrder o = *this;
  o.priority_ = std::move(priority);
  return o;
}

std::strong_ordering MonomialOrder::compare_plain(OrderKind kind, const ExponentVector& u,
                                                  const ExponentVector& v) const {
  if (kind != OrderKind::Lex) {
    Exponent du = 0, dv = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
      du += u[i];
      dv += v[i];
    }
    if (du != dv) return du <=> dv;
  }
  if (kind == OrderKind::GradedRevLex) {
    for (std::size_t k = priority_.size(); k-- > 0;) {
      std::size_t i = priority_[k];
      if (u[i] != v[i]) return v[i] <=> u[i];
    }
    return std::strong_ordering::equal;
  }
  for (std::size_t i : priority_)
    if (u[i] != v[i]) return u[i] <=> v[i];
  return std::strong_ordering::equal;
}

std::strong_ordering MonomialOrder::compare(const ExponentVector& u, const ExponentVector& v) const {
  if (u.size() != size() || v.size() != size())
    throw std::invalid_argument("monomial length does not match the order (" + std::to_string(size()) +
                                " variables)");
  if (kind_ != OrderKind::Weight) return compare_plain(kind_, u, v);
  Exponent wu = 0, wv = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    wu = checked_add(wu, checked_mul(integer_weights_[i], u[i]));
    wv = checked_add(wv, checked_mul(integer_weights_[i], v[i]));
  }
  if (wu != wv) return wu <=> wv;
  return compare_plain(tiebreak_, u, v);
}

namespace {
const char* kind_name(OrderKind k) {
  switch (k) {
    case OrderKind::Lex: return "lex";
    case OrderKind::GradedLex: return "grlex";
    case OrderKind::GradedRevLex: return "grevlex";
    case OrderKind::Weight: return "weight";
  }
  return "?";
}
}  // namespace

std::string MonomialOrder::describe() const {
  std::string s = kind_name(kind_);
  if (kind_ == OrderKind::Weight) {
    s += ':';
    for (std::size_t i = 0; i < weights_.size(); ++i) {
      if (i) s += ',';
      s += weights_[i].get_str();
    }
    if (tiebreak_ != OrderKind::GradedRevLex) s += std::string("/") + kind_name(tiebreak_);
  }
  bool identity = true;
  for (std::size_t i = 0; i < priority_.size(); ++i) identity = identity && priority_[i] == i;
  if (!identity) {
    s += " priority=";
    for (std::size_t i = 0; i < priority_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(priority_[i] + 1);
    }
  }
  return s;
}

}  // namespace nestconf
