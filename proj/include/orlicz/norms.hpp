#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "orlicz/measure.hpp"
#include "orlicz/xreal.hpp"
#include "orlicz/young.hpp"

namespace orlicz {

enum class NormMethod { PredicateBisection, RootEquation, ClosedForm };

std::string to_string(NormMethod m);

struct NormResult {
  ExtReal value;
  NormMethod method = NormMethod::PredicateBisection;
  /// |I_Φ(f/λ) - 1| at the returned λ; present for Φ in Y1 ∪ Y2 and f != 0,
  /// where the normalization equality is expected to hold.
  std::optional<double> residual;
};

/// sup_{u > 0} u μ({v > u}) for extended values v_k on atoms with weights w_k.
/// Any atom with v_k = ∞ makes the supremum infinite.
ExtReal level_sup(std::span<const ExtReal> values, std::span<const double> weights);

/// sum_k Φ(|f_k| / λ) μ_k, λ > 0.
ExtReal lux_modular(const YoungFunction& phi, const SimpleFunction& f, double lambda);

/// Luxemburg norm by bisection on λ of the predicate "modular <= 1".
NormResult lux_norm(const YoungFunction& phi, const SimpleFunction& f);

/// sup_t Φ(t) μ(f/λ, t), as max_j Φ(c_j/λ) T_j over the layer form.
ExtReal weak_sup_form1(const YoungFunction& phi, const SimpleFunction& f, double lambda = 1.0);

/// sup_u u μ(f/λ, Φ^{-1}(u)). Enumerates the pieces between consecutive
/// finite values Φ(c_j/λ), reading each piece's constant tail through the
/// generalized inverse and the distribution function.
ExtReal weak_sup_form2(const YoungFunction& phi, const SimpleFunction& f, double lambda = 1.0);

/// Dense log-grid lower estimate of the form-2 supremum (cross-check only).
double weak_sup_form2_grid(const YoungFunction& phi, const SimpleFunction& f, int points = 4001);

/// sup_u u μ(Φ(|f|/λ), u), by pushing Φ through the atom values.
ExtReal weak_sup_form3(const YoungFunction& phi, const SimpleFunction& f, double lambda = 1.0);

/// Weak quasi-norm by bisection on λ of the predicate "form1(f/λ) <= 1".
NormResult weak_norm(const YoungFunction& phi, const SimpleFunction& f);

/// Weak quasi-norm from the per-layer thresholds max_j c_j / Φ^{-1}(1 / T_j).
/// Independent of the bisection route; valid for every class.
NormResult weak_norm_closed_form(const YoungFunction& phi, const SimpleFunction& f);

/// Layer-level building blocks shared with the multiplier checks.
double weak_functional(const YoungFunction& phi, const LayerForm& layers, double lambda);
double lux_functional(const YoungFunction& phi, const LayerForm& layers, double lambda);

/// |form1(f / ||f||_w) - 1|. Rejects Y3 and the zero function.
double normalization_audit(const YoungFunction& phi, const SimpleFunction& f);

/// form3(f / ||f||_w) <= 1 + 1e-9. Rejects the zero function.
bool le1_audit(const YoungFunction& phi, const SimpleFunction& f);

struct EmbeddingReport {
  double weak = 0.0;
  double lux = 0.0;
  double sup_norm = 0.0;
  double b = kInf;
  bool weak_le_lux = true;
  std::optional<bool> sup_le_b_weak;  // only when b(Φ) < ∞
  bool pass = true;
};

EmbeddingReport embedding_audit(const YoungFunction& phi, const SimpleFunction& f);

struct FatouReport {
  std::vector<double> stage_norms;
  double limit_norm = 0.0;
  bool monotone = true;
  bool bounded = true;
  bool pass = true;
};

/// Weak norms of f_j = min(f, j max(f) / J) are nondecreasing and the norm of
/// f does not exceed their supremum.
FatouReport fatou_audit(const YoungFunction& phi, const SimpleFunction& f, int stages);

}  // namespace orlicz
