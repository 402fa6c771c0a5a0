#pragma once

#include "rdtn/rational.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rdtn {

/// Parameter tuple of the local well-posedness theory. All entries are
/// exact rationals; kappa absent means "use the critical weight".
struct ExponentParams {
    int d = 2;    // spatial dimension
    int ell = 1;  // number of components
    Rational p;   // temporal integrability
    Rational q;   // spatial integrability
    Rational h;   // growth exponent of the nonlinearity
    Rational delta;
    std::optional<Rational> kappa;
};

struct Violation {
    std::string name;    // identifier of the failed condition
    std::string detail;  // rendered inequality with both sides
};

struct AdmissibilityReport {
    bool admissible = false;
    std::vector<Violation> violated;
    /// Open interval the spatial integrability must lie in, when the
    /// endpoints are well defined for the given (d, h, delta).
    std::optional<std::pair<Rational, Rational>> q_range;
    std::optional<Rational> kappa_critical;
    std::optional<Rational> trace_smoothness;  // d/q - 2/(h-1)

    std::string describe() const;
};

class InadmissibleError : public std::runtime_error {
  public:
    InadmissibleError(std::string what, AdmissibilityReport report)
        : std::runtime_error(std::move(what)), report(std::move(report)) {}
    AdmissibilityReport report;
};

struct CriticalWeight {
    Rational kappa_c;
    Rational trace_smoothness;
};

struct BlowupExponents {
    Rational beta0;   // d/q0 - 2/(h0-1)
    Rational gamma0;  // beta0 + 2/p0
    Rational zeta0;   // d(h0-1)/2
    Rational delta0;  // admissible smoothness shift used
};

/// Exponents of the two nonlinearity estimates entering the
/// subcriticality conditions, with the branch taken for each.
struct SubcriticalityExponents {
    Rational beta1;
    Rational beta2;
    Rational rho1;  // h - 1
    Rational rho2;  // (h - 1)/2
    bool beta1_low_q_branch = false;
    bool beta2_low_q_branch = false;
};

struct OneDimReport {
    int branch = 0;  // 1: delta + 1/q > 2, 2: delta + 1/q < 2
    Rational bound;  // admissible upper bound for (1+kappa)/p
    bool satisfied = false;
};

struct AdmissibleWitness {
    Rational p, q, delta;
};

/// Growth threshold above which admissible exponents exist. Exactly 3
/// for d=2; for d>=3 a quadratic surd. d <= 1 is a domain error.
QuadraticSurd fujita_exponent(int d);

/// Checks every admissibility condition in exact arithmetic and reports
/// all violations, not just the first. Requires d >= 2.
AdmissibilityReport check_admissible(const ExponentParams& params);

/// Critical weight kappa_c = p(h/(h-1) - (delta + d/q)/2) - 1 and the
/// trace-space smoothness d/q - 2/(h-1). Throws InadmissibleError.
CriticalWeight critical_weight(const ExponentParams& params);

/// Blow-up criterion exponents for the tuple (p0, q0, h0). When delta0
/// is absent an admissible value is searched for; failure to find one
/// throws InadmissibleError.
BlowupExponents blowup_exponents(const Rational& p0, const Rational& q0, const Rational& h0,
                                 int d, std::optional<Rational> delta0 = std::nullopt);

/// Requires q > max{d/(d-delta), d(h-1)/(2h-delta(h-1))}; throws
/// std::domain_error naming the failed bound otherwise. For delta = 1
/// the second split point is treated as +infinity.
SubcriticalityExponents subcriticality_exponents(const Rational& q, const Rational& h,
                                                 const Rational& delta, int d);

/// One-dimensional branch conditions. The boundary delta + 1/q = 2 is
/// rejected with std::domain_error.
OneDimReport check_one_dim(const Rational& p, const Rational& q, const Rational& h,
                           const Rational& delta, const Rational& kappa);

/// Growth window for the p = q = 2 endpoint setting.
bool check_l2_endpoint(const Rational& h, int d);

/// Exact region test: does any admissible (p, q, delta) exist for this
/// (d, h)? Decided by interval reasoning on the q-range as delta
/// increases to its supremum, with no floating point involved.
bool admissible_exists(int d, const Rational& h);

/// Constructive counterpart of admissible_exists: produces a witness
/// verified by check_admissible, or nullopt when the region is empty.
std::optional<AdmissibleWitness> find_admissible(int d, const Rational& h);

}  // namespace rdtn
