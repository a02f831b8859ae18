#ifndef DEPMARK_MIXED_LAW_HPP
#define DEPMARK_MIXED_LAW_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "depmark/errors.hpp"
#include "depmark/rng.hpp"

namespace depmark {

// One-dimensional law given as point masses plus uniform pieces. Carrier for
// every marginal and conditional distribution in the library.
struct LawAtom {
    double location = 0.0;
    double mass = 0.0;
};

struct LawPiece {
    double lower = 0.0;
    double upper = 0.0;
    double mass = 0.0; // spread uniformly on [lower, upper]
};

namespace detail {

// Antiderivative of clamp((t - lo)/(hi - lo), 0, 1), vanishing at -inf.
inline double uniform_cdf_antideriv(double t, double lo, double hi) {
    if (t <= lo) return 0.0;
    if (t >= hi) return 0.5 * (hi - lo) + (t - hi);
    const double d = t - lo;
    return 0.5 * d * d / (hi - lo);
}

} // namespace detail

enum class AtomPolicy { reject_duplicates, merge_duplicates };

class MixedLaw1D {
public:
    MixedLaw1D() = default;

    // Validates and normalizes. Masses must be nonnegative and sum to 1
    // within `mass_tol` before normalization; afterwards they sum to 1
    // exactly up to rounding. Duplicate atom locations are merged or
    // rejected according to `policy`.
    static MixedLaw1D create(std::vector<LawAtom> atoms,
                             std::vector<LawPiece> pieces,
                             AtomPolicy policy = AtomPolicy::reject_duplicates,
                             double mass_tol = 1e-6) {
        MixedLaw1D law;
        double total = 0.0;
        for (const auto& a : atoms) {
            if (a.mass < 0.0) throw MassError("atom mass must be nonnegative");
            total += a.mass;
        }
        for (const auto& p : pieces) {
            if (p.mass < 0.0) throw MassError("piece mass must be nonnegative");
            if (!(p.lower < p.upper))
                throw GeometryError("piece requires lower < upper; state degenerate intervals as atoms");
            total += p.mass;
        }
        if (std::abs(total - 1.0) > mass_tol)
            throw MassError("masses sum to " + std::to_string(total) + ", expected 1");

        std::sort(atoms.begin(), atoms.end(),
                  [](const LawAtom& a, const LawAtom& b) { return a.location < b.location; });
        for (const auto& a : atoms) {
            if (a.mass == 0.0) continue;
            if (!law.atoms_.empty() && law.atoms_.back().location == a.location) {
                if (policy == AtomPolicy::reject_duplicates)
                    throw GeometryError("duplicate atom locations");
                law.atoms_.back().mass += a.mass;
            } else {
                law.atoms_.push_back(a);
            }
        }
        std::sort(pieces.begin(), pieces.end(), [](const LawPiece& a, const LawPiece& b) {
            return a.lower != b.lower ? a.lower < b.lower : a.upper < b.upper;
        });
        for (const auto& p : pieces) {
            if (p.mass == 0.0) continue;
            if (!law.pieces_.empty() && law.pieces_.back().lower == p.lower &&
                law.pieces_.back().upper == p.upper) {
                law.pieces_.back().mass += p.mass; // identical supports fold together
            } else {
                law.pieces_.push_back(p);
            }
        }
        if (law.atoms_.empty() && law.pieces_.empty())
            throw MassError("law carries no mass");

        for (auto& a : law.atoms_) a.mass /= total;
        for (auto& p : law.pieces_) p.mass /= total;
        law.build_table();
        return law;
    }

    const std::vector<LawAtom>& atoms() const { return atoms_; }
    const std::vector<LawPiece>& pieces() const { return pieces_; }

    // Sorted distinct atom locations and piece endpoints.
    const std::vector<double>& breakpoints() const { return bp_; }

    double support_min() const { return bp_.front(); }
    double support_max() const { return bp_.back(); }

    bool is_degenerate() const {
        return atoms_.size() == 1 && pieces_.empty();
    }

    // Right-continuous CDF.
    double cdf(double y) const {
        if (y < bp_.front()) return 0.0;
        if (y >= bp_.back()) return 1.0;
        const std::size_t i = segment_of(y);
        return fr_[i] + slope_[i] * (y - bp_[i]);
    }

    // Left limit, P(Z < y).
    double cdf_left(double y) const {
        if (y <= bp_.front()) return 0.0;
        if (y > bp_.back()) return 1.0;
        auto it = std::lower_bound(bp_.begin(), bp_.end(), y);
        if (it != bp_.end() && *it == y) return fl_[static_cast<std::size_t>(it - bp_.begin())];
        const std::size_t i = segment_of(y);
        return fr_[i] + slope_[i] * (y - bp_[i]);
    }

    double atom_mass_at(double y) const {
        auto it = std::lower_bound(atoms_.begin(), atoms_.end(), y,
                                   [](const LawAtom& a, double v) { return a.location < v; });
        if (it != atoms_.end() && it->location == y) return it->mass;
        return 0.0;
    }

    // Generalized inverse inf{y : F(y) >= u}. u = 0 yields -infinity.
    double quantile(double u) const {
        if (u < 0.0 || u > 1.0) throw DomainError("quantile level outside [0, 1]");
        if (u == 0.0) return -std::numeric_limits<double>::infinity();
        // first breakpoint with F(bp) >= u
        auto it = std::lower_bound(fr_.begin(), fr_.end(), u);
        std::size_t i = static_cast<std::size_t>(it - fr_.begin());
        if (i >= bp_.size()) return bp_.back(); // u == 1 guarded by forced fr_.back() == 1
        if (i == 0) return bp_.front();
        if (fl_[i] >= u) {
            // u was reached strictly inside (bp[i-1], bp[i])
            return bp_[i - 1] + (u - fr_[i - 1]) / slope_[i - 1];
        }
        return bp_[i];
    }

    double mean() const {
        double m = 0.0;
        for (const auto& a : atoms_) m += a.mass * a.location;
        for (const auto& p : pieces_) m += p.mass * 0.5 * (p.lower + p.upper);
        return m;
    }

    double second_moment() const {
        double m = 0.0;
        for (const auto& a : atoms_) m += a.mass * a.location * a.location;
        for (const auto& p : pieces_)
            m += p.mass * (p.lower * p.lower + p.lower * p.upper + p.upper * p.upper) / 3.0;
        return m;
    }

    double variance() const {
        const double mu = mean();
        return std::max(0.0, second_moment() - mu * mu);
    }

    // Exact integral of the CDF over [a, b].
    double cdf_integral(double a, double b) const {
        if (!(a < b)) return 0.0;
        double acc = 0.0;
        for (const auto& at : atoms_) {
            const double cut = std::clamp(at.location, a, b);
            acc += at.mass * (b - cut);
        }
        for (const auto& p : pieces_) {
            acc += p.mass * (detail::uniform_cdf_antideriv(b, p.lower, p.upper) -
                             detail::uniform_cdf_antideriv(a, p.lower, p.upper));
        }
        return acc;
    }

    // Uniform density contributed on an interval (a, b) that contains no
    // breakpoint in its interior.
    double density_within(double a, double b) const {
        double dens = 0.0;
        for (const auto& p : pieces_) {
            if (p.lower <= a && b <= p.upper) dens += p.mass / (p.upper - p.lower);
        }
        return dens;
    }

    double sample(RandomStream& rng) const { return quantile(rng.uniform01()); }

private:
    std::size_t segment_of(double y) const {
        auto it = std::upper_bound(bp_.begin(), bp_.end(), y);
        return static_cast<std::size_t>(it - bp_.begin()) - 1;
    }

    void build_table() {
        bp_.clear();
        for (const auto& a : atoms_) bp_.push_back(a.location);
        for (const auto& p : pieces_) {
            bp_.push_back(p.lower);
            bp_.push_back(p.upper);
        }
        std::sort(bp_.begin(), bp_.end());
        bp_.erase(std::unique(bp_.begin(), bp_.end()), bp_.end());

        const std::size_t m = bp_.size();
        fl_.assign(m, 0.0);
        fr_.assign(m, 0.0);
        slope_.assign(m > 0 ? m - 1 : 0, 0.0);
        double acc = 0.0;
        std::size_t ai = 0;
        for (std::size_t i = 0; i < m; ++i) {
            fl_[i] = std::min(1.0, acc);
            if (ai < atoms_.size() && atoms_[ai].location == bp_[i]) acc += atoms_[ai++].mass;
            fr_[i] = std::min(1.0, acc);
            if (i + 1 < m) {
                const double dens = density_within(bp_[i], bp_[i + 1]);
                slope_[i] = dens;
                acc += dens * (bp_[i + 1] - bp_[i]);
            }
        }
        // Normalized masses make acc == 1 up to rounding; pin the endpoint so
        // quantile(1) and cdf beyond the support are exact.
        fr_.back() = 1.0;
        if (m >= 2) fl_.back() = std::min(fl_.back(), 1.0);
    }

    std::vector<LawAtom> atoms_;   // sorted by location
    std::vector<LawPiece> pieces_; // sorted by (lower, upper)
    std::vector<double> bp_, fl_, fr_, slope_;
};

// Relative effect Psi(P1, P2) = P(Z1 < Z2) + P(Z1 = Z2)/2 for independent
// Z1 ~ law1, Z2 ~ law2, evaluated in closed form through the CDF of law1.
inline double relative_effect(const MixedLaw1D& law1, const MixedLaw1D& law2) {
    double psi = 0.0;
    for (const auto& a : law2.atoms())
        psi += a.mass * (law1.cdf_left(a.location) + 0.5 * law1.atom_mass_at(a.location));
    for (const auto& p : law2.pieces())
        psi += p.mass / (p.upper - p.lower) * law1.cdf_integral(p.lower, p.upper);
    return psi;
}

// Pairwise order probabilities for independent Z1 ~ law1, Z2 ~ law2,
// accumulated part against part without going through a CDF. Serves as the
// concordance/discordance route, deliberately separate from relative_effect.
struct OrderProbs {
    double less = 0.0;    // P(Z1 < Z2)
    double equal = 0.0;   // P(Z1 = Z2)
    double greater = 0.0; // P(Z1 > Z2)
};

inline OrderProbs order_probs(const MixedLaw1D& law1, const MixedLaw1D& law2) {
    OrderProbs o;
    for (const auto& a1 : law1.atoms()) {
        for (const auto& a2 : law2.atoms()) {
            const double m = a1.mass * a2.mass;
            if (a1.location < a2.location) o.less += m;
            else if (a1.location > a2.location) o.greater += m;
            else o.equal += m;
        }
        for (const auto& p2 : law2.pieces()) {
            const double cut = std::clamp(a1.location, p2.lower, p2.upper);
            const double m = a1.mass * p2.mass / (p2.upper - p2.lower);
            o.less += m * (p2.upper - cut);
            o.greater += m * (cut - p2.lower);
        }
    }
    for (const auto& p1 : law1.pieces()) {
        for (const auto& a2 : law2.atoms()) {
            const double cut = std::clamp(a2.location, p1.lower, p1.upper);
            const double m = p1.mass * a2.mass / (p1.upper - p1.lower);
            o.less += m * (cut - p1.lower);
            o.greater += m * (p1.upper - cut);
        }
        for (const auto& p2 : law2.pieces()) {
            const double m = p1.mass * p2.mass / (p2.upper - p2.lower);
            // P(U < V) for U ~ U[p1], V ~ U[p2]
            const double area = detail::uniform_cdf_antideriv(p2.upper, p1.lower, p1.upper) -
                                detail::uniform_cdf_antideriv(p2.lower, p1.lower, p1.upper);
            o.less += m * area;
            // P(U > V) by the mirrored geometry
            const double area_gt =
                (p2.upper - p2.lower) - area;
            o.greater += m * area_gt;
        }
    }
    return o;
}

} // namespace depmark

#endif // DEPMARK_MIXED_LAW_HPP
