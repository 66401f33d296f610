#include "gss/lincomb.hpp"

#include <sstream>

namespace gss {

LinComb LinComb::of(const Graph& ordered, const Rational& c) {
  LinComb x;
  x.add(ordered, c);
  return x;
}

void LinComb::add_canonical(const std::string& key, const Graph& g, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, Term{g, c});
    return;
  }
  it->second.coeff += c;
  if (it->second.coeff == 0) terms_.erase(it);
}

void LinComb::add(const OrderedGenerator& g, const Rational& c) {
  if (g.is_zero()) return;
  add_canonical(g.canonical_key, g.graph, g.sign > 0 ? c : Rational(-c));
}

void LinComb::add(const Graph& ordered, const Rational& c) {
  if (c == 0) return;
  add(OrderedGenerator::normalize(ordered), c);
}

void LinComb::add(const LinComb& other, const Rational& c) {
  if (c == 0) return;
  for (const auto& [key, t] : other.terms_) add_canonical(key, t.graph, t.coeff * c);
}

Rational LinComb::coefficient(const Graph& ordered) const {
  OrderedGenerator g = OrderedGenerator::normalize(ordered);
  if (g.is_zero()) return 0;
  auto it = terms_.find(g.canonical_key);
  if (it == terms_.end()) return 0;
  return g.sign > 0 ? it->second.coeff : Rational(-it->second.coeff);
}

LinComb LinComb::scaled(const Rational& c) const {
  LinComb x;
  x.add(*this, c);
  return x;
}

LinComb operator+(const LinComb& a, const LinComb& b) {
  LinComb x = a;
  x.add(b, 1);
  return x;
}

LinComb operator-(const LinComb& a, const LinComb& b) {
  LinComb x = a;
  x.add(b, -1);
  return x;
}

bool operator==(const LinComb& a, const LinComb& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (const auto& [key, t] : a.terms_) {
    auto it = b.terms_.find(key);
    if (it == b.terms_.end() || it->second.coeff != t.coeff) return false;
  }
  return true;
}

std::string LinComb::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, t] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << t.coeff << "*[" << format_graph(t.graph) << "]";
  }
  return os.str();
}

void TensorLinComb::add_canonical(const Key& key, const Graph& left, const Graph& right,
                                  const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, Term{left, right, c});
    return;
  }
  it->second.coeff += c;
  if (it->second.coeff == 0) terms_.erase(it);
}

void TensorLinComb::add(const Graph& left, const Graph& right, const Rational& c) {
  if (c == 0) return;
  OrderedGenerator a = OrderedGenerator::normalize(left);
  if (a.is_zero()) return;
  OrderedGenerator b = OrderedGenerator::normalize(right);
  if (b.is_zero()) return;
  Rational v = c;
  if (a.sign * b.sign < 0) v = -v;
  add_canonical({a.canonical_key, b.canonical_key}, a.graph, b.graph, v);
}

void TensorLinComb::add(const TensorLinComb& other, const Rational& c) {
  for (const auto& [key, t] : other.terms_) add_canonical(key, t.left, t.right, t.coeff * c);
}

Rational TensorLinComb::coefficient(const Graph& left, const Graph& right) const {
  OrderedGenerator a = OrderedGenerator::normalize(left);
  OrderedGenerator b = OrderedGenerator::normalize(right);
  if (a.is_zero() || b.is_zero()) return 0;
  auto it = terms_.find({a.canonical_key, b.canonical_key});
  if (it == terms_.end()) return 0;
  return a.sign * b.sign > 0 ? it->second.coeff : Rational(-it->second.coeff);
}

bool operator==(const TensorLinComb& a, const TensorLinComb& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (const auto& [key, t] : a.terms_) {
    auto it = b.terms_.find(key);
    if (it == b.terms_.end() || it->second.coeff != t.coeff) return false;
  }
  return true;
}

std::string TensorLinComb::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, t] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << t.coeff << "*[" << format_graph(t.left) << "](x)[" << format_graph(t.right) << "]";
  }
  return os.str();
}

}  // namespace gss
