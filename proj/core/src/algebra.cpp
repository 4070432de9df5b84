#include "tri3/algebra.hpp"

#include <sstream>

#include "tri3/errors.hpp"

namespace tri3 {

Vector Tensor3::contract(const Vector& x, const Vector& y) const {
  if (x.size() != n0_ || y.size() != n1_) throw DimensionMismatch("tensor contraction: operand length mismatch");
  Vector out(n2_);
  for (std::size_t i = 0; i < n0_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n1_; ++j) {
      if (y[j].is_zero()) continue;
      const Rational xy = x[i] * y[j];
      for (std::size_t k = 0; k < n2_; ++k) out[k].add_product(xy, (*this)(i, j, k));
    }
  }
  return out;
}

Vector Tensor3::fiber(std::size_t i, std::size_t j) const {
  Vector out(n2_);
  for (std::size_t k = 0; k < n2_; ++k) out[k] = (*this)(i, j, k);
  return out;
}

bool Tensor3::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

void ValidationReport::add(std::string axiom, std::vector<std::size_t> witness, std::string detail) {
  violations.push_back({std::move(axiom), std::move(witness), std::move(detail)});
}

void ValidationReport::merge(const ValidationReport& other, const std::string& prefix) {
  for (const auto& v : other.violations) violations.push_back({prefix + v.axiom, v.witness, v.detail});
}

bool ValidationReport::mentions(const std::string& axiom) const {
  for (const auto& v : violations)
    if (v.axiom.find(axiom) != std::string::npos) return true;
  return false;
}

std::string ValidationReport::to_string(std::size_t max_lines) const {
  std::ostringstream os;
  std::size_t shown = 0;
  for (const auto& v : violations) {
    if (shown++ == max_lines) {
      os << "... " << (violations.size() - max_lines) << " more\n";
      break;
    }
    os << v.axiom << " fails at (";
    for (std::size_t i = 0; i < v.witness.size(); ++i) os << (i ? "," : "") << v.witness[i];
    os << ")";
    if (!v.detail.empty()) os << ": " << v.detail;
    os << '\n';
  }
  return os.str();
}

Vector multiply(const StructureAlgebra& alg, const Vector& x, const Vector& y) {
  if (x.size() != alg.dim || y.size() != alg.dim) throw DimensionMismatch("multiply: vector length != algebra dim");
  return alg.mult.contract(x, y);
}

Vector left_act(const Bimodule& mod, const Vector& a, const Vector& m) { return mod.left_action.contract(a, m); }

Vector right_act(const Bimodule& mod, const Vector& m, const Vector& b) { return mod.right_action.contract(m, b); }

Vector pair(const Pairing& mu, const Vector& m, const Vector& n) { return mu.tensor.contract(m, n); }

namespace {

/// Product x e_k using precomputed basis products, for x given in coordinates.
Vector times_basis_right(const Tensor3& t, const Vector& x, std::size_t k) {
  Vector out(t.extent(2));
  for (std::size_t l = 0; l < x.size(); ++l) {
    if (x[l].is_zero()) continue;
    for (std::size_t r = 0; r < out.size(); ++r) out[r].add_product(x[l], t(l, k, r));
  }
  return out;
}

Vector times_basis_left(const Tensor3& t, std::size_t i, const Vector& x) {
  Vector out(t.extent(2));
  for (std::size_t l = 0; l < x.size(); ++l) {
    if (x[l].is_zero()) continue;
    for (std::size_t r = 0; r < out.size(); ++r) out[r].add_product(x[l], t(i, l, r));
  }
  return out;
}

void require_shape(const Tensor3& t, std::size_t n0, std::size_t n1, std::size_t n2, const std::string& what) {
  if (!t.has_shape(n0, n1, n2))
    throw DimensionMismatch(what + ": tensor shape (" + std::to_string(t.extent(0)) + "," +
                            std::to_string(t.extent(1)) + "," + std::to_string(t.extent(2)) + ") expected (" +
                            std::to_string(n0) + "," + std::to_string(n1) + "," + std::to_string(n2) + ")");
}

}  // namespace

ValidationReport validate_algebra(const StructureAlgebra& alg) {
  const std::size_t d = alg.dim;
  require_shape(alg.mult, d, d, d, "algebra '" + alg.name + "' multiplication");
  if (alg.unit && alg.unit->size() != d) throw DimensionMismatch("algebra '" + alg.name + "': unit length != dim");

  ValidationReport report;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const Vector ij = alg.mult.fiber(i, j);
      for (std::size_t k = 0; k < d; ++k) {
        const Vector lhs = times_basis_right(alg.mult, ij, k);
        const Vector rhs = times_basis_left(alg.mult, i, alg.mult.fiber(j, k));
        if (lhs != rhs) report.add("associativity", {i, j, k}, "(e_i e_j) e_k != e_i (e_j e_k)");
      }
    }
  if (alg.unit) {
    for (std::size_t j = 0; j < d; ++j) {
      const Vector e = unit_vector(d, j);
      if (multiply(alg, *alg.unit, e) != e) report.add("left unit", {j}, "u e_j != e_j");
      if (multiply(alg, e, *alg.unit) != e) report.add("right unit", {j}, "e_j u != e_j");
    }
  }
  return report;
}

ValidationReport validate_bimodule(const Bimodule& mod) {
  if (!mod.left || !mod.right) throw PreconditionError("bimodule '" + mod.name + "' is missing an acting algebra");
  const StructureAlgebra& A = *mod.left;
  const StructureAlgebra& B = *mod.right;
  const std::size_t d = mod.dim;
  require_shape(mod.left_action, A.dim, d, d, "bimodule '" + mod.name + "' left action");
  require_shape(mod.right_action, d, B.dim, d, "bimodule '" + mod.name + "' right action");

  ValidationReport report;
  // (a_i a_j) m_k = a_i (a_j m_k)
  for (std::size_t i = 0; i < A.dim; ++i)
    for (std::size_t j = 0; j < A.dim; ++j) {
      const Vector aa = A.mult.fiber(i, j);
      for (std::size_t k = 0; k < d; ++k) {
        const Vector lhs = left_act(mod, aa, unit_vector(d, k));
        const Vector rhs = times_basis_left(mod.left_action, i, mod.left_action.fiber(j, k));
        if (lhs != rhs) report.add("left module associativity", {i, j, k}, "(a_i a_j) m_k != a_i (a_j m_k)");
      }
    }
  // m_i (b_j b_k) = (m_i b_j) b_k
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < B.dim; ++j) {
      const Vector mb = mod.right_action.fiber(i, j);
      for (std::size_t k = 0; k < B.dim; ++k) {
        const Vector lhs = right_act(mod, unit_vector(d, i), B.mult.fiber(j, k));
        const Vector rhs = times_basis_right(mod.right_action, mb, k);
        if (lhs != rhs) report.add("right module associativity", {i, j, k}, "m_i (b_j b_k) != (m_i b_j) b_k");
      }
    }
  // (a_i m_j) b_k = a_i (m_j b_k)
  for (std::size_t i = 0; i < A.dim; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const Vector am = mod.left_action.fiber(i, j);
      for (std::size_t k = 0; k < B.dim; ++k) {
        const Vector lhs = times_basis_right(mod.right_action, am, k);
        const Vector rhs = times_basis_left(mod.left_action, i, mod.right_action.fiber(j, k));
        if (lhs != rhs) report.add("actions commute", {i, j, k}, "(a_i m_j) b_k != a_i (m_j b_k)");
      }
    }
  if (A.unit)
    for (std::size_t j = 0; j < d; ++j) {
      const Vector e = unit_vector(d, j);
      if (left_act(mod, *A.unit, e) != e) report.add("left unit action", {j}, "e_A m_j != m_j");
    }
  if (B.unit)
    for (std::size_t j = 0; j < d; ++j) {
      const Vector e = unit_vector(d, j);
      if (right_act(mod, e, *B.unit) != e) report.add("right unit action", {j}, "m_j e_B != m_j");
    }
  return report;
}

bool same_algebra(const StructureAlgebra& a, const StructureAlgebra& b) {
  return &a == &b || (a.dim == b.dim && a.mult == b.mult && a.unit == b.unit);
}

ValidationReport validate_pairing(const Pairing& pairing) {
  if (!pairing.module_m || !pairing.module_n || !pairing.module_p)
    throw PreconditionError("pairing is missing a module reference");
  const Bimodule& M = *pairing.module_m;
  const Bimodule& N = *pairing.module_n;
  const Bimodule& P = *pairing.module_p;
  if (!M.left || !M.right || !N.left || !N.right || !P.left || !P.right)
    throw PreconditionError("pairing modules are missing acting algebras");
  if (!same_algebra(*M.left, *P.left) || !same_algebra(*M.right, *N.left) || !same_algebra(*N.right, *P.right))
    throw PreconditionError("pairing: inconsistent algebra references (need M over (A,B), N over (B,C), P over (A,C))");
  require_shape(pairing.tensor, M.dim, N.dim, P.dim, "pairing");

  const StructureAlgebra& A = *M.left;
  const StructureAlgebra& B = *M.right;
  const StructureAlgebra& C = *N.right;
  ValidationReport report;

  // mu(a_i m_j (x) n_k) = a_i mu(m_j (x) n_k)
  for (std::size_t i = 0; i < A.dim; ++i)
    for (std::size_t j = 0; j < M.dim; ++j) {
      const Vector am = M.left_action.fiber(i, j);
      for (std::size_t k = 0; k < N.dim; ++k) {
        const Vector lhs = pair(pairing, am, unit_vector(N.dim, k));
        const Vector rhs = left_act(P, unit_vector(A.dim, i), pairing.tensor.fiber(j, k));
        if (lhs != rhs) report.add("A-linearity", {i, j, k}, "mu(a_i m_j (x) n_k) != a_i mu(m_j (x) n_k)");
      }
    }
  // mu(m_i (x) n_j c_k) = mu(m_i (x) n_j) c_k
  for (std::size_t i = 0; i < M.dim; ++i)
    for (std::size_t j = 0; j < N.dim; ++j) {
      const Vector mn = pairing.tensor.fiber(i, j);
      for (std::size_t k = 0; k < C.dim; ++k) {
        const Vector lhs = pair(pairing, unit_vector(M.dim, i), N.right_action.fiber(j, k));
        const Vector rhs = right_act(P, mn, unit_vector(C.dim, k));
        if (lhs != rhs) report.add("C-linearity", {i, j, k}, "mu(m_i (x) n_j c_k) != mu(m_i (x) n_j) c_k");
      }
    }
  // mu(m_i b_j (x) n_k) = mu(m_i (x) b_j n_k)
  for (std::size_t i = 0; i < M.dim; ++i)
    for (std::size_t j = 0; j < B.dim; ++j) {
      const Vector mb = M.right_action.fiber(i, j);
      for (std::size_t k = 0; k < N.dim; ++k) {
        const Vector lhs = pair(pairing, mb, unit_vector(N.dim, k));
        const Vector rhs = pair(pairing, unit_vector(M.dim, i), N.left_action.fiber(j, k));
        if (lhs != rhs) report.add("B-balance", {i, j, k}, "mu(m_i b_j (x) n_k) != mu(m_i (x) b_j n_k)");
      }
    }
  return report;
}

Subspace center(const StructureAlgebra& alg) {
  const std::size_t d = alg.dim;
  RowEchelon constraints(d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = 0; k < d; ++k) {
      Vector row(d);
      for (std::size_t i = 0; i < d; ++i) row[i] = alg.mult(i, j, k) - alg.mult(j, i, k);
      constraints.add(row);
    }
  return constraints.kernel();
}

bool is_commutative(const StructureAlgebra& alg) {
  for (std::size_t i = 0; i < alg.dim; ++i)
    for (std::size_t j = i + 1; j < alg.dim; ++j)
      if (alg.mult.fiber(i, j) != alg.mult.fiber(j, i)) return false;
  return true;
}

}  // namespace tri3
