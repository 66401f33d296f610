#ifndef GSS_LINCOMB_HPP
#define GSS_LINCOMB_HPP

#include <map>
#include <string>
#include <utility>

#include "gss/canonical.hpp"
#include "gss/linalg.hpp"

namespace gss {

// Rational combination of canonical generators, keyed by canonical key.
class LinComb {
 public:
  struct Term {
    Graph graph;  // canonical representative in canonical edge order
    Rational coeff;
  };

  LinComb() = default;
  static LinComb of(const Graph& ordered, const Rational& c = 1);

  // Normalizes the ordered graph and adds c times it.
  void add(const Graph& ordered, const Rational& c = 1);
  void add(const OrderedGenerator& g, const Rational& c = 1);
  void add(const LinComb& other, const Rational& c = 1);

  const std::map<std::string, Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  // Coefficient of the ordered graph itself, sign included.
  Rational coefficient(const Graph& ordered) const;

  LinComb scaled(const Rational& c) const;
  friend LinComb operator+(const LinComb& a, const LinComb& b);
  friend LinComb operator-(const LinComb& a, const LinComb& b);
  friend bool operator==(const LinComb& a, const LinComb& b);

  // "c*[V=.. ISO=.. E=..] + ..." in key order.
  std::string to_string() const;

 private:
  void add_canonical(const std::string& key, const Graph& g, const Rational& c);
  std::map<std::string, Term> terms_;
};

class TensorLinComb {
 public:
  struct Term {
    Graph left;
    Graph right;
    Rational coeff;
  };
  using Key = std::pair<std::string, std::string>;

  void add(const Graph& left, const Graph& right, const Rational& c = 1);
  void add(const TensorLinComb& other, const Rational& c = 1);
  void add_canonical(const Key& key, const Graph& left, const Graph& right, const Rational& c);

  const std::map<Key, Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const Graph& left, const Graph& right) const;

  friend bool operator==(const TensorLinComb& a, const TensorLinComb& b);
  std::string to_string() const;

 private:
  std::map<Key, Term> terms_;
};

}  // namespace gss

#endif
