#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "modkit/matrix.hpp"
#include "modkit/twist.hpp"

namespace modkit {

/// Dense fusion tensor, N(a, b, c) = N^c_{a,b}.
class FusionTensor {
 public:
  FusionTensor() = default;
  explicit FusionTensor(int n) : n_(n), data_(static_cast<std::size_t>(n) * n * n, 0) {}

  int size() const { return n_; }
  int operator()(int a, int b, int c) const { return data_[index(a, b, c)]; }
  int& operator()(int a, int b, int c) { return data_[index(a, b, c)]; }

  /// (N_a)_{b,c} = N^c_{a,b}
  IMatrix matrix(int a) const;

  friend bool operator==(const FusionTensor&, const FusionTensor&) = default;

 private:
  std::size_t index(int a, int b, int c) const {
    return (static_cast<std::size_t>(a) * n_ + b) * n_ + c;
  }
  int n_ = 0;
  std::vector<int> data_;
};

/// Label set, fusion coefficients and conjugation. Label 0 is the identity sector.
struct FusionRules {
  std::vector<std::string> labels;
  FusionTensor fusion;
  std::vector<int> conjugation;

  int size() const { return static_cast<int>(labels.size()); }
};

struct AxiomViolation {
  std::string axiom;
  std::vector<int> witness;
};

/// Checks unit, associativity, Frobenius reciprocity, conjugation and (when
/// dimensions are supplied) the dimension homomorphism. Empty means valid.
std::vector<AxiomViolation> verify_fusion_axioms(const FusionRules& rules,
                                                 const std::vector<double>* dims = nullptr);

/// Perron-Frobenius dimensions by power iteration on sum_a N_a.
/// Throws DegenerateInput when the fusion graph is reducible or iteration stalls.
template <typename Real>
std::vector<Real> perron_frobenius_dimensions(const FusionRules& rules);

inline std::vector<double> quantum_dimensions(const FusionRules& rules) {
  return perron_frobenius_dimensions<double>(rules);
}

/// Fusion rules together with their quantum dimensions. Immutable.
class FusionSystem {
 public:
  explicit FusionSystem(FusionRules rules);

  int size() const { return rules_.size(); }
  const FusionRules& rules() const { return rules_; }
  const std::vector<std::string>& labels() const { return rules_.labels; }
  int N(int a, int b, int c) const { return rules_.fusion(a, b, c); }
  int conj(int a) const { return rules_.conjugation[a]; }
  const std::vector<double>& dims() const { return d_; }
  double dim(int a) const { return d_[a]; }
  /// w = sum_a d_a^2
  double global_index() const { return w_; }
  IMatrix conjugation_matrix() const;

 private:
  FusionRules rules_;
  std::vector<double> d_;
  double w_ = 0.0;
};

inline double global_index(const FusionSystem& f) { return f.global_index(); }

/// Tensor product of two systems; label (a, b) has index a * n2 + b.
FusionSystem tensor_product(const FusionSystem& a, const FusionSystem& b);
Twists tensor_twists(const Twists& a, const Twists& b);

}  // namespace modkit
