#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tri3/matrix.hpp"
#include "tri3/subspace.hpp"

namespace tri3 {

/// Dense order-3 tensor of rationals, indexed (i, j, k).
class Tensor3 {
 public:
  Tensor3() = default;
  Tensor3(std::size_t n0, std::size_t n1, std::size_t n2) : n0_(n0), n1_(n1), n2_(n2), data_(n0 * n1 * n2) {}

  std::size_t extent(int axis) const { return axis == 0 ? n0_ : (axis == 1 ? n1_ : n2_); }
  bool has_shape(std::size_t n0, std::size_t n1, std::size_t n2) const {
    return n0_ == n0 && n1_ == n1 && n2_ == n2;
  }

  Rational& operator()(std::size_t i, std::size_t j, std::size_t k) { return data_[(i * n1_ + j) * n2_ + k]; }
  const Rational& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[(i * n1_ + j) * n2_ + k];
  }

  /// out[k] = sum_ij x_i y_j t(i,j,k)
  Vector contract(const Vector& x, const Vector& y) const;
  /// t(i, j, .) as a vector.
  Vector fiber(std::size_t i, std::size_t j) const;
  bool is_zero() const;

  friend bool operator==(const Tensor3&, const Tensor3&) = default;

 private:
  std::size_t n0_ = 0, n1_ = 0, n2_ = 0;
  std::vector<Rational> data_;
};

/// Finite-dimensional associative algebra on basis e_0..e_{dim-1} with
/// e_i e_j = sum_k mult(i,j,k) e_k.
struct StructureAlgebra {
  std::string name;
  std::size_t dim = 0;
  Tensor3 mult;
  std::optional<Vector> unit;
};

/// Left `left`-module, right `right`-module on basis m_0..m_{dim-1}.
/// left_action(i,j,k): a_i m_j = sum_k ... m_k; right_action(i,j,k): m_i b_j = sum_k ... m_k.
struct Bimodule {
  std::string name;
  std::size_t dim = 0;
  std::shared_ptr<const StructureAlgebra> left;
  std::shared_ptr<const StructureAlgebra> right;
  Tensor3 left_action;
  Tensor3 right_action;
};

/// mu(m_i (x) n_j) = sum_k tensor(i,j,k) p_k
struct Pairing {
  std::shared_ptr<const Bimodule> module_m;
  std::shared_ptr<const Bimodule> module_n;
  std::shared_ptr<const Bimodule> module_p;
  Tensor3 tensor;
};

struct Violation {
  std::string axiom;
  std::vector<std::size_t> witness;
  std::string detail;
};

/// Outcome of an axiom check: empty means every axiom holds.
struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  void add(std::string axiom, std::vector<std::size_t> witness, std::string detail = {});
  void merge(const ValidationReport& other, const std::string& prefix);
  bool mentions(const std::string& axiom) const;
  std::string to_string(std::size_t max_lines = 20) const;
};

/// Thrown when a structure fails its validators; carries the full report.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(const std::string& what, ValidationReport report)
      : std::runtime_error(what), report_(std::move(report)) {}
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

Vector multiply(const StructureAlgebra& alg, const Vector& x, const Vector& y);
Vector left_act(const Bimodule& mod, const Vector& a, const Vector& m);
Vector right_act(const Bimodule& mod, const Vector& m, const Vector& b);
Vector pair(const Pairing& mu, const Vector& m, const Vector& n);

ValidationReport validate_algebra(const StructureAlgebra& alg);
ValidationReport validate_bimodule(const Bimodule& mod);
ValidationReport validate_pairing(const Pairing& pairing);

/// {x : x e_j = e_j x for every j}
Subspace center(const StructureAlgebra& alg);

bool is_commutative(const StructureAlgebra& alg);

/// Same structure constants and unit (names are ignored).
bool same_algebra(const StructureAlgebra& a, const StructureAlgebra& b);

}  // namespace tri3
