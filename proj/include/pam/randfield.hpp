#ifndef PAM_RANDFIELD_HPP
#define PAM_RANDFIELD_HPP

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pam/lattice.hpp"

namespace pam {

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();
inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class TailFamily { DoubleExp, Weibull, Tabulated };

/// Upper-tail model of the single-site marginal. F is continuous with
/// F(r) < 1 everywhere; phi(r) = log 1/(1-F(r)) and psi is its
/// left-continuous inverse. Fields are sampled as psi(eta) with eta a unit
/// exponential, which reproduces F exactly.
class TailModel {
 public:
  static TailModel double_exp(double rho);       // Prob(xi > r) = exp(-e^{r/rho})
  static TailModel weibull(double alpha);        // Prob(xi > r) = exp(-r^alpha), r >= 0
  static TailModel tabulated(std::vector<std::pair<double, double>> r_F);

  TailFamily family() const { return family_; }
  double rho() const { return rho_; }      // DoubleExp parameter
  double alpha() const { return alpha_; }  // Weibull parameter
  /// The tail class parameter: rho for DoubleExp, +inf for Weibull and for
  /// tabulated models (which are treated as heavier-tailed diagnostics).
  double rho_effective() const;

  double phi(double r) const;
  double psi(double s) const;

  std::string describe() const;
  static TailModel parse(const std::string& descriptor);

 private:
  TailModel() = default;
  TailFamily family_ = TailFamily::DoubleExp;
  double rho_ = 1.0;
  double alpha_ = 2.0;
  std::vector<std::pair<double, double>> table_;  // (r, F(r)), strictly increasing
  std::vector<double> table_phi_;                 // phi at the table knots
};

/// Potential values over a finite box; -inf marks excluded sites.
class PotentialField {
 public:
  PotentialField() = default;
  PotentialField(BoxDomain domain, double fill = 0.0);

  const BoxDomain& domain() const { return domain_; }
  double at(const Site& x) const { return values_[static_cast<std::size_t>(domain_.index_of(x))]; }
  void set(const Site& x, double v) { values_[static_cast<std::size_t>(domain_.index_of(x))] = v; }
  const std::vector<double>& values() const { return values_; }
  std::vector<double>& values() { return values_; }
  std::optional<std::uint64_t> seed() const { return seed_; }
  void set_seed(std::uint64_t s) { seed_ = s; }
  std::optional<std::string> model_descriptor() const { return model_; }
  void set_model_descriptor(std::string m) { model_ = std::move(m); }

 private:
  BoxDomain domain_;
  std::vector<double> values_;
  std::optional<std::uint64_t> seed_;
  std::optional<std::string> model_;
};

/// Deterministic per-site unit exponential keyed on (seed, coordinates).
/// Values do not depend on the enclosing box, so nested boxes agree on
/// their overlap and sampling parallelizes trivially.
double site_exponential(std::uint64_t seed, const Site& x);

PotentialField sample_field(const TailModel& model, const BoxDomain& box, std::uint64_t seed);

/// max over the subbox; requires subbox inside the field domain and nonempty.
double height(const PotentialField& field, const BoxDomain& subbox);

struct TailDiagnosticRow {
  double s = 0, c = 0;
  double psi_cs_minus_psi_s = 0;  // compare against rho*log(c)
  double rho_log_c = 0;
  double psi_shift_log = 0;  // psi(s + log s) - psi(s), the (1.8) probe
  double psi_over_log = 0;   // psi(s)/log(s), the (1.9) probe
  bool flagged = false;
};

struct TailDiagnostic {
  std::vector<TailDiagnosticRow> rows;
  bool any_flagged = false;
};

TailDiagnostic tail_diagnostic(const TailModel& model, const std::vector<double>& s_grid,
                               const std::vector<double>& c_grid, double tol = 1e-6);

/// CSV round trip for replaying exact disorder realizations.
void write_field_csv(const PotentialField& field, std::ostream& os);
PotentialField read_field_csv(std::istream& is);
void write_field_csv_file(const PotentialField& field, const std::string& path);
PotentialField read_field_csv_file(const std::string& path);

}  // namespace pam

#endif
