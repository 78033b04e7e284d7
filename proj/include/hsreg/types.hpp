#ifndef HSREG_TYPES_HPP
#define HSREG_TYPES_HPP

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace hsreg {

/// Design-level constants entering every shrinkage-factor formula:
/// observation count n, predictor count dim, noise sd sigma, and the
/// per-predictor standard deviations s_j (empty means all ones).
struct ShrinkageContext {
  int n = 1;
  int dim = 1;
  double sigma = 1.0;
  Eigen::VectorXd scales;  // length dim, or empty for unit scales

  double scale(int j) const { return scales.size() == 0 ? 1.0 : scales[j]; }

  // tau * sqrt(n) * s_j / sigma: the quantity controlling how much prior
  // mass sits on the unshrunk side of the shrinkage profile.
  double scale_ratio(double tau, int j) const {
    return tau * std::sqrt(static_cast<double>(n)) * scale(j) / sigma;
  }

  void validate() const {
    if (n < 1) throw std::invalid_argument("ShrinkageContext: n must be >= 1");
    if (dim < 1) throw std::invalid_argument("ShrinkageContext: dim must be >= 1");
    if (!(sigma > 0.0)) throw std::invalid_argument("ShrinkageContext: sigma must be > 0");
    if (scales.size() != 0) {
      if (scales.size() != dim)
        throw std::invalid_argument("ShrinkageContext: scales length != dim");
      for (int j = 0; j < scales.size(); ++j)
        if (!(scales[j] > 0.0))
          throw std::invalid_argument("ShrinkageContext: scales must be > 0");
    }
  }
};

/// Slab regularizing the largest coefficients. Infinite recovers the pure
/// horseshoe; FixedScale is a Gaussian slab of sd c; InverseGammaOnCSquared
/// puts c^2 ~ Inv-Gamma(alpha, beta), i.e. a Student-t slab.
struct SlabSpec {
  enum class Kind { Infinite, FixedScale, InverseGammaOnCSquared };
  Kind kind = Kind::Infinite;
  double c = 1.0;       // FixedScale only
  double alpha = 2.0;   // InverseGamma only
  double beta = 8.0;    // InverseGamma only

  static SlabSpec infinite() { return SlabSpec{}; }
  static SlabSpec fixed_scale(double c) {
    SlabSpec s;
    s.kind = Kind::FixedScale;
    s.c = c;
    return s;
  }
  static SlabSpec inverse_gamma(double alpha, double beta) {
    SlabSpec s;
    s.kind = Kind::InverseGammaOnCSquared;
    s.alpha = alpha;
    s.beta = beta;
    return s;
  }

  void validate() const {
    if (kind == Kind::FixedScale && !(c > 0.0))
      throw std::invalid_argument("SlabSpec: fixed scale c must be > 0");
    if (kind == Kind::InverseGammaOnCSquared && (!(alpha > 0.0) || !(beta > 0.0)))
      throw std::invalid_argument("SlabSpec: inverse-gamma parameters must be > 0");
  }
};

/// Observation family. Gaussian and BinomialLogit are fitting families;
/// the remaining rows exist for pseudo-variance elicitation only.
struct GlmFamily {
  enum class Tag { Gaussian, BinomialLogit, PoissonLog, GammaInverse, InverseGaussianInvSq };
  Tag tag = Tag::Gaussian;
  double shape = 1.0;  // Gamma: alpha; InverseGaussian: lambda

  static GlmFamily gaussian() { return GlmFamily{}; }
  static GlmFamily binomial_logit() { return GlmFamily{Tag::BinomialLogit, 1.0}; }
  static GlmFamily poisson_log() { return GlmFamily{Tag::PoissonLog, 1.0}; }
  static GlmFamily gamma_inverse(double alpha) {
    if (!(alpha > 0.0)) throw std::invalid_argument("GlmFamily: gamma shape must be > 0");
    return GlmFamily{Tag::GammaInverse, alpha};
  }
  static GlmFamily inverse_gaussian_invsq(double lambda) {
    if (!(lambda > 0.0)) throw std::invalid_argument("GlmFamily: inverse-gaussian shape must be > 0");
    return GlmFamily{Tag::InverseGaussianInvSq, lambda};
  }

  std::string name() const {
    switch (tag) {
      case Tag::Gaussian: return "gaussian";
      case Tag::BinomialLogit: return "binomial-logit";
      case Tag::PoissonLog: return "poisson-log";
      case Tag::GammaInverse: return "gamma-inverse";
      case Tag::InverseGaussianInvSq: return "inverse-gaussian-invsq";
    }
    return "?";
  }
};

/// Hyperprior on the global shrinkage scale tau.
struct TauPrior {
  enum class Kind { Fixed, HalfNormal, HalfCauchy, HalfStudentT };
  Kind kind = Kind::HalfCauchy;
  double value = 1.0;  // Fixed: the value itself; otherwise the scale
  double dof = 3.0;    // HalfStudentT only

  static TauPrior fixed(double v) { return TauPrior{Kind::Fixed, v, 1.0}; }
  static TauPrior half_normal(double scale) { return TauPrior{Kind::HalfNormal, scale, 1.0}; }
  static TauPrior half_cauchy(double scale) { return TauPrior{Kind::HalfCauchy, scale, 1.0}; }
  static TauPrior half_student_t(double dof, double scale) {
    return TauPrior{Kind::HalfStudentT, scale, dof};
  }

  // Half-Cauchy is half-Student-t with one degree of freedom.
  double dof_effective() const { return kind == Kind::HalfStudentT ? dof : 1.0; }

  std::string name() const {
    switch (kind) {
      case Kind::Fixed: return "fixed";
      case Kind::HalfNormal: return "half-normal";
      case Kind::HalfCauchy: return "half-cauchy";
      case Kind::HalfStudentT: return "half-student-t";
    }
    return "?";
  }

  void validate() const {
    if (!(value > 0.0)) throw std::invalid_argument("TauPrior: scale/value must be > 0");
    if (kind == Kind::HalfStudentT && !(dof > 0.0))
      throw std::invalid_argument("TauPrior: dof must be > 0");
  }
};

}  // namespace hsreg

#endif
