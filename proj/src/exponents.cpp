#include "rdtn/exponents.hpp"

#include <sstream>

namespace rdtn {

namespace {

void add_violation(std::vector<Violation>& out, const std::string& name, const Rational& lhs,
                   const char* rel, const Rational& rhs) {
    out.push_back({name, rational_str(lhs) + " " + rel + " " + rational_str(rhs)});
}

}  // namespace

std::string AdmissibilityReport::describe() const {
    std::ostringstream os;
    if (admissible) {
        os << "admissible";
        if (kappa_critical) os << "; kappa_c = " << rational_str(*kappa_critical);
        if (trace_smoothness) os << "; trace smoothness = " << rational_str(*trace_smoothness);
    } else {
        os << "inadmissible:";
        for (const auto& v : violated) os << " [" << v.name << ": " << v.detail << "]";
    }
    return os.str();
}

QuadraticSurd fujita_exponent(int d) {
    if (d <= 1) throw std::domain_error("fujita_exponent: requires d >= 2");
    if (d == 2) return QuadraticSurd(Rational(3), Rational(0));
    Rational c = Rational(1, 2) + Rational(1, d);
    return QuadraticSurd(c, c * c + Rational(2, d));
}

AdmissibilityReport check_admissible(const ExponentParams& pr) {
    if (pr.d < 2) throw std::domain_error("check_admissible: requires d >= 2");
    AdmissibilityReport rep;
    const Rational &p = pr.p, &q = pr.q, &h = pr.h, &del = pr.delta;
    const Rational d(pr.d);

    bool h_ok = h > 1;
    if (!h_ok) add_violation(rep.violated, "h_gt_1", h, ">", Rational(1));
    if (del < 1) add_violation(rep.violated, "delta_min", del, ">=", Rational(1));
    if (h_ok) {
        Rational del_sup = (h + 1) / h;
        if (del >= del_sup) add_violation(rep.violated, "delta_max", del, "<", del_sup);
    }
    if (p <= 2) add_violation(rep.violated, "p_gt_2", p, ">", Rational(2));
    if (q < 2) add_violation(rep.violated, "q_ge_2", q, ">=", Rational(2));

    if (h_ok && q > 0 && p > 0) {
        Rational lhs = 1 / p + (del + d / q) / 2;
        Rational rhs = h / (h - 1);
        if (lhs > rhs) add_violation(rep.violated, "time_space_balance", lhs, "<=", rhs);
    }
    // q-interval endpoints, defined when the denominators are positive
    std::optional<Rational> q_lo, q_hi;
    if (d - del > 0) q_lo = d / (d - del);
    if (h_ok) {
        Rational denom = h + 1 - del * (h - 1);
        if (denom > 0) q_hi = d * (h - 1) / denom;
    }
    if (q_lo && q_hi) rep.q_range = std::make_pair(*q_lo, *q_hi);
    if (q_lo && q <= *q_lo) add_violation(rep.violated, "q_above_lower", q, ">", *q_lo);
    if (q_hi && q >= *q_hi) add_violation(rep.violated, "q_below_upper", q, "<", *q_hi);

    if (pr.kappa) {
        if (*pr.kappa < 0)
            add_violation(rep.violated, "kappa_min", *pr.kappa, ">=", Rational(0));
        if (p > 2 && *pr.kappa >= p / 2 - 1)
            add_violation(rep.violated, "kappa_max", *pr.kappa, "<", p / 2 - 1);
    }

    rep.admissible = rep.violated.empty();
    if (h_ok && q > 0) rep.trace_smoothness = d / q - 2 / (h - 1);
    if (rep.admissible) rep.kappa_critical = p * (h / (h - 1) - (del + d / q) / 2) - 1;
    return rep;
}

CriticalWeight critical_weight(const ExponentParams& params) {
    AdmissibilityReport rep = check_admissible(params);
    if (!rep.admissible)
        throw InadmissibleError("critical_weight: " + rep.describe(), std::move(rep));
    return {*rep.kappa_critical, *rep.trace_smoothness};
}

BlowupExponents blowup_exponents(const Rational& p0, const Rational& q0, const Rational& h0,
                                 int d, std::optional<Rational> delta0) {
    auto admissible_with = [&](const Rational& del) {
        ExponentParams pr;
        pr.d = d;
        pr.p = p0;
        pr.q = q0;
        pr.h = h0;
        pr.delta = del;
        return check_admissible(pr);
    };

    Rational del_used;
    if (delta0) {
        auto rep = admissible_with(*delta0);
        if (!rep.admissible)
            throw InadmissibleError("blowup_exponents: " + rep.describe(), std::move(rep));
        del_used = *delta0;
    } else {
        if (h0 <= 1 || q0 <= 0 || p0 <= 2) {
            auto rep = admissible_with(Rational(1));
            throw InadmissibleError("blowup_exponents: " + rep.describe(), std::move(rep));
        }
        // Feasible delta interval from the exact constraints:
        //   delta > (q(h+1) - d(h-1)) / (q(h-1))      (upper q bound)
        //   delta < min{(h+1)/h, d(q-1)/q}            (range and lower q bound)
        //   delta <= 2h/(h-1) - 2/p - d/q             (time-space balance)
        Rational dd(d);
        Rational lo = (q0 * (h0 + 1) - dd * (h0 - 1)) / (q0 * (h0 - 1));
        if (lo < 1) lo = 1;
        Rational hi_open = (h0 + 1) / h0;
        Rational cap = dd * (q0 - 1) / q0;
        if (cap < hi_open) hi_open = cap;
        Rational hi_closed = 2 * h0 / (h0 - 1) - 2 / p0 - dd / q0;
        Rational hi = hi_open < hi_closed ? hi_open : hi_closed;

        std::vector<Rational> candidates;
        if (hi > lo) {
            candidates.push_back((lo + hi) / 2);
            candidates.push_back((lo + 3 * hi) / 4);
            candidates.push_back((3 * lo + hi) / 4);
        }
        if (hi_closed < hi_open && hi_closed >= 1) candidates.push_back(hi_closed);
        candidates.push_back(Rational(1));

        bool found = false;
        for (const auto& cand : candidates) {
            if (cand < 1) continue;
            auto rep = admissible_with(cand);
            if (rep.admissible) {
                del_used = cand;
                found = true;
                break;
            }
        }
        if (!found) {
            auto rep = admissible_with(lo >= 1 ? lo : Rational(1));
            throw InadmissibleError("blowup_exponents: no admissible delta0 for the tuple",
                                    std::move(rep));
        }
    }

    BlowupExponents out;
    out.beta0 = Rational(d) / q0 - 2 / (h0 - 1);
    out.gamma0 = out.beta0 + 2 / p0;
    out.zeta0 = Rational(d) * (h0 - 1) / 2;
    out.delta0 = del_used;
    return out;
}

SubcriticalityExponents subcriticality_exponents(const Rational& q, const Rational& h,
                                                 const Rational& delta, int d) {
    if (d < 1) throw std::domain_error("subcriticality_exponents: requires d >= 1");
    if (h <= 1) throw std::domain_error("subcriticality_exponents: requires h > 1");
    if (delta < 1 || delta >= 2)
        throw std::domain_error("subcriticality_exponents: requires delta in [1, 2)");
    const Rational dd(d);
    if (dd - delta <= 0 || q <= dd / (dd - delta))
        throw std::domain_error("subcriticality_exponents: q must exceed d/(d-delta), got q = " +
                                rational_str(q));
    Rational denom = 2 * h - delta * (h - 1);
    if (q <= dd * (h - 1) / denom)
        throw std::domain_error(
            "subcriticality_exponents: q must exceed d(h-1)/(2h-delta(h-1)), got q = " +
            rational_str(q));

    SubcriticalityExponents out;
    out.rho1 = h - 1;
    out.rho2 = (h - 1) / 2;

    Rational split1 = dd * (h - 1) / delta;
    out.beta1_low_q_branch = q < split1;
    out.beta1 = out.beta1_low_q_branch ? (delta + dd / q) * (1 - 1 / h) / 2 : delta / 2;

    // For delta = 1 the second split point degenerates to +infinity and
    // the low-q branch always applies.
    out.beta2_low_q_branch = delta == 1 || q < dd * (h - 1) / (2 * (delta - 1));
    out.beta2 = out.beta2_low_q_branch
                    ? 1 / (h + 1) + (delta + dd / q) * (h - 1) / (2 * (h + 1))
                    : delta / 2;

    auto in_unit = [](const Rational& b) { return b > 0 && b < 1; };
    if (!in_unit(out.beta1) || !in_unit(out.beta2))
        throw std::logic_error("subcriticality_exponents: exponent left (0,1)");
    return out;
}

OneDimReport check_one_dim(const Rational& p, const Rational& q, const Rational& h,
                           const Rational& delta, const Rational& kappa) {
    if (q < 2) throw std::domain_error("check_one_dim: requires q >= 2");
    if (h <= 1) throw std::domain_error("check_one_dim: requires h > 1");
    if (delta < 1 || delta >= 2) throw std::domain_error("check_one_dim: requires delta in [1,2)");
    if (p <= 2) throw std::domain_error("check_one_dim: requires p > 2");
    if (kappa < 0 || kappa >= p / 2 - 1)
        throw std::domain_error("check_one_dim: requires kappa in [0, p/2 - 1)");
    if (1 / q - 1 / h >= 2 - delta)
        throw std::domain_error("check_one_dim: requires 1/q - 1/h < 2 - delta");

    Rational edge = delta + 1 / q;
    if (edge == 2)
        throw std::domain_error("check_one_dim: unsupported boundary delta + 1/q = 2");

    OneDimReport rep;
    Rational t1 = 1 - delta / 2;
    Rational t2 = t1 + 1 / (2 * h) - 1 / (2 * q);
    Rational min_term = t1 < t2 ? t1 : t2;
    if (edge > 2) {
        rep.branch = 1;
    } else {
        rep.branch = 2;
        Rational t3 = 1 - (h - 1) / (2 * h) * edge;
        if (t3 < min_term) min_term = t3;
    }
    rep.bound = h / (h - 1) * min_term;
    rep.satisfied = (1 + kappa) / p <= rep.bound;
    return rep;
}

bool check_l2_endpoint(const Rational& h, int d) {
    if (d < 1) throw std::domain_error("check_l2_endpoint: requires d >= 1");
    if (h <= 1) return false;
    if (d == 1) return h <= 4;
    if (d == 2) return h < 3;
    return h <= Rational(4 + d, d);
}

namespace {

// Lower and upper endpoints of the q-interval at a given delta.
struct QInterval {
    Rational lo;  // max of the two strict lower bounds
    Rational hi;  // strict upper bound
};

QInterval q_interval(int d, const Rational& h, const Rational& delta) {
    Rational dd(d);
    Rational lo1 = dd / (dd - delta);
    Rational lo2 = dd * (h - 1) / (2 * h - delta * (h - 1));
    return {lo1 > lo2 ? lo1 : lo2, dd * (h - 1) / (h + 1 - delta * (h - 1))};
}

}  // namespace

bool admissible_exists(int d, const Rational& h) {
    if (d < 2) throw std::domain_error("admissible_exists: requires d >= 2");
    if (h <= 1) return false;
    // The gap between the strict lower bounds and the upper bound of the
    // q-interval does not depend on delta; it is nonempty exactly when
    // h(d-1) > d+1. The additional constraint q >= 2 is satisfiable for
    // some delta below (h+1)/h exactly when the supremum of the upper
    // endpoint, d h (h-1)/(h+1), exceeds 2.
    Rational dd(d);
    if (h * (dd - 1) <= dd + 1) return false;
    return dd * h * (h - 1) / (h + 1) > 2;
}

std::optional<AdmissibleWitness> find_admissible(int d, const Rational& h) {
    if (!admissible_exists(d, h)) return std::nullopt;
    Rational span = 1 / h;  // (h+1)/h - 1
    Rational del_sup = (h + 1) / h;
    for (int j = 0; j < 128; ++j) {
        Rational delta = j == 0 ? Rational(1) : del_sup - span / (BigInt(1) << j);
        if (delta < 1) continue;
        QInterval iv = q_interval(d, h, delta);
        // q must satisfy q >= 2, q > iv.lo (strict) and q < iv.hi (strict)
        Rational q;
        if (iv.lo < 2) {
            if (iv.hi <= 2) continue;
            q = 2;
        } else {
            if (iv.hi <= iv.lo) continue;
            q = (iv.lo + iv.hi) / 2;
        }
        Rational rhs = h / (h - 1) - (delta + Rational(d) / q) / 2;
        if (rhs <= 0) continue;
        Rational p = 2 / rhs;  // twice the minimal temporal integrability
        if (p <= 2) p = 3;
        ExponentParams pr;
        pr.d = d;
        pr.p = p;
        pr.q = q;
        pr.h = h;
        pr.delta = delta;
        if (check_admissible(pr).admissible) return AdmissibleWitness{p, q, delta};
    }
    return std::nullopt;
}

}  // namespace rdtn
