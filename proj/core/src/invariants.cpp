#include "selfloop/invariants.hpp"

#include "selfloop/construct.hpp"
#include "selfloop/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace selfloop {

double energy_about(const Spectrum& spectrum, const Rational& center) {
    const double c = to_double(center);
    double sum = 0.0;
    for (double x : spectrum.values)
        sum += std::abs(x - c);
    return sum;
}

EnergyValue energy(const LoopedGraph& gs) {
    if (gs.order() == 0)
        throw DomainError("energy of the empty graph is undefined");
    EnergyValue e;
    e.center = Rational(gs.sigma(), gs.order());
    e.spectrum = eig_sym(adjacency(gs));
    e.value = energy_about(e.spectrum, e.center);
    return e;
}

TraceIdentities trace_identities(const LoopedGraph& gs, const Spectrum& spectrum) {
    TraceIdentities t;
    t.sum = spectrum.sum();
    t.sum_of_squares = spectrum.sum_of_squares();
    t.expected_sum = gs.sigma();
    t.expected_sum_of_squares = 2LL * gs.size() + gs.sigma();
    t.tolerance = 1e-9 * gs.order();
    t.holds = std::abs(t.sum - static_cast<double>(t.expected_sum)) <= t.tolerance &&
              std::abs(t.sum_of_squares - static_cast<double>(t.expected_sum_of_squares)) <= t.tolerance;
    return t;
}

TraceIdentities trace_identities(const LoopedGraph& gs) { return trace_identities(gs, eig_sym(adjacency(gs))); }

void require_trace_identities(const LoopedGraph& gs, const Spectrum& spectrum) {
    const auto t = trace_identities(gs, spectrum);
    if (!t.holds) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "trace identities broken: sum " << t.sum << " vs " << t.expected_sum << ", sum of squares "
            << t.sum_of_squares << " vs " << t.expected_sum_of_squares;
        throw NumericError(msg.str());
    }
}

ZagrebPair zagreb(const LoopedGraph& gs) {
    ZagrebPair z;
    for (int v = 0; v < gs.order(); ++v) {
        const long long d = gs.base().degree(v);
        const long long ds = gs.degree(v);
        z.m1_base += d * d;
        z.m1_looped += ds * ds;
    }
    return z;
}

Rational degree_deviation(const SimpleGraph& g) {
    const int n = g.order();
    if (n == 0)
        return 0;
    // Σ |n·d − 2m| / n keeps everything integral until the last step.
    BigInt total = 0;
    const long long twice_m = 2LL * g.size();
    for (int d : g.degrees())
        total += std::llabs(static_cast<long long>(n) * d - twice_m);
    return Rational(total, n);
}

InterlacingVerdict check_interlacing(const LoopedGraph& gs, std::span<const int> vertices, double tol) {
    InterlacingVerdict out;
    const auto a = adjacency(gs);
    out.host = eig_sym(a);
    const int n = gs.order();
    const int k = static_cast<int>(vertices.size());
    if (k == 0) {
        out.holds = true;
        return out;
    }
    for (int v : vertices)
        if (v < 0 || v >= n)
            throw DomainError("interlacing vertex out of range");
    out.induced = eig_sym(a.principal(std::vector<int>(vertices.begin(), vertices.end())));
    out.worst_excess = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < k; ++i) {
        const double mu = out.induced[static_cast<std::size_t>(i)];
        out.worst_excess = std::max(out.worst_excess, mu - out.host[static_cast<std::size_t>(i)]);
        out.worst_excess = std::max(out.worst_excess, out.host[static_cast<std::size_t>(n - k + i)] - mu);
    }
    out.holds = out.worst_excess <= tol;
    return out;
}

ShiftInterlacing check_shift_interlacing(const Spectrum& base, const Spectrum& looped, int sigma, double tol) {
    if (base.size() != looped.size())
        throw DomainError("shift interlacing needs spectra of equal length");
    ShiftInterlacing out;
    out.lower_excess = -std::numeric_limits<double>::infinity();
    out.upper_excess = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < base.size(); ++i) {
        const double diff = looped[i] - base[i];
        out.lower_excess = std::max(out.lower_excess, -diff);
        out.upper_excess = std::max(out.upper_excess, diff - 1.0);
        out.lower_gap = std::max(out.lower_gap, std::abs(diff));
        out.upper_gap = std::max(out.upper_gap, std::abs(diff - 1.0));
    }
    out.lower_holds = out.lower_excess <= tol;
    out.upper_holds = out.upper_excess <= tol;
    const int n = static_cast<int>(base.size());
    out.equality_chains_hold = true;
    if (sigma == 0)
        out.equality_chains_hold = out.lower_gap <= tol;
    if (sigma == n)
        out.equality_chains_hold = out.equality_chains_hold && out.upper_gap <= tol;
    return out;
}

ShiftInterlacing check_shift_interlacing(const SimpleGraph& g, const LoopSet& s, double tol) {
    const auto gs = make_looped(g, s);
    return check_shift_interlacing(eig_sym(adjacency(g)), eig_sym(adjacency(gs)), gs.sigma(), tol);
}

std::vector<double> closed_form_kn_sigma_spectrum(int n, int sigma) {
    if (n < 1 || sigma < 0 || sigma > n)
        throw DomainError("closed-form (K_n)_S spectrum needs n >= 1 and 0 <= sigma <= n");
    std::vector<double> out;
    if (sigma == 0) {
        out.push_back(n - 1.0);
        out.insert(out.end(), static_cast<std::size_t>(n - 1), -1.0);
    } else if (sigma == n) {
        out.push_back(static_cast<double>(n));
        out.insert(out.end(), static_cast<std::size_t>(n - 1), 0.0);
    } else {
        const double root = std::sqrt((n - 1.0) * (n - 1.0) + 4.0 * sigma);
        out.push_back(((n - 1.0) + root) / 2.0);
        out.insert(out.end(), static_cast<std::size_t>(sigma - 1), 0.0);
        out.insert(out.end(), static_cast<std::size_t>(n - sigma - 1), -1.0);
        out.push_back(((n - 1.0) - root) / 2.0);
    }
    std::sort(out.begin(), out.end(), std::greater<>{});
    return out;
}

namespace {

void check_ng_domain(int n, int sigma) {
    if (n < 2 || sigma < 0 || sigma > n)
        throw DomainError("Nordhaus-Gaddum energy forms need n >= 2 and 0 <= sigma <= n");
}

BigInt ng_radicand(int n, int sigma) { return BigInt(n - 2) * (n - 2) + 8 * sigma; }

} // namespace

QuadraticSurd ng_energy_lower_exact(int n, int sigma) {
    check_ng_domain(n, sigma);
    const BigInt d = ng_radicand(n, sigma);
    const Rational ratio(2 * sigma, n); // 2σ/n
    const Rational half(1, 2);
    const auto t = QuadraticSurd::rational(Rational(n) - 2 * ratio, d); // n − 4σ/n
    const auto root = QuadraticSurd::root(d);

    auto total = QuadraticSurd::rational(Rational(sigma - 1) * abs(Rational(1) - ratio), d);
    total += QuadraticSurd::rational(Rational(n - sigma - 1) * (Rational(1) + ratio), d);
    total += half * (t + root).abs();
    total += half * (t - root).abs();
    return total;
}

QuadraticSurd ng_energy_lower_simplified_exact(int n, int sigma) {
    check_ng_domain(n, sigma);
    const BigInt d = ng_radicand(n, sigma);
    const auto root = QuadraticSurd::root(d);
    const Rational four_sigma_over_n(4 * sigma, n);
    if (2 * sigma > n)
        return QuadraticSurd::rational(Rational(n) - four_sigma_over_n, d) + root;
    const Rational half(1, 2);
    const Rational sn = Rational(sigma);
    const Rational base = Rational(3 * n, 2) - 2 + 2 * sn * (Rational(1) - Rational(1, n) - Rational(2 * sigma, n));
    const auto t = QuadraticSurd::rational(Rational(n) - four_sigma_over_n, d);
    return QuadraticSurd::rational(base, d) + half * root + half * (t - root).abs();
}

NgEnergyForms ng_energy_closed_forms(int n, int sigma) {
    check_ng_domain(n, sigma);
    NgEnergyForms f;
    const double nn = n;
    const double s = sigma;
    const double root = std::sqrt((nn - 2.0) * (nn - 2.0) + 8.0 * s);
    const double t = nn - 4.0 * s / nn;
    f.x1 = 0.5 * (t + root);
    f.x2 = 0.5 * (t - root);
    f.lower = (s - 1.0) * std::abs(1.0 - 2.0 * s / nn) + (nn - s - 1.0) * (1.0 + 2.0 * s / nn) +
              0.5 * std::abs(t + root) + 0.5 * std::abs(t - root);
    f.upper = 2.0 * std::sqrt(2.0) * std::sqrt(2.0 * s * (nn - 1.0) * (nn - s) + (nn * nn - nn) * (nn * nn - nn));
    if (2 * sigma > n)
        f.lower_simplified = t + root;
    else
        f.lower_simplified = 1.5 * nn - 2.0 + 2.0 * s * (1.0 - 1.0 / nn - 2.0 * s / nn) + 0.5 * root +
                             0.5 * std::abs(t - root);
    return f;
}

std::vector<double> ng_aux_closed_form_spectrum(int n, int sigma) {
    const auto f = ng_energy_closed_forms(n, sigma);
    std::vector<double> out{f.x1, f.x2};
    const auto apply = [&out](double value, int multiplicity) {
        if (multiplicity >= 0) {
            out.insert(out.end(), static_cast<std::size_t>(multiplicity), value);
            return;
        }
        for (int k = 0; k < -multiplicity; ++k) {
            const auto it = std::min_element(out.begin(), out.end(), [value](double a, double b) {
                return std::abs(a - value) < std::abs(b - value);
            });
            if (it == out.end() || std::abs(*it - value) > 1e-9)
                throw NumericError("negative multiplicity does not cancel a closed-form root");
            out.erase(it);
        }
    };
    apply(1.0 - 2.0 * sigma / n, sigma - 1);
    apply(-1.0 - 2.0 * sigma / n, n - sigma - 1);
    std::sort(out.begin(), out.end(), std::greater<>{});
    return out;
}

} // namespace selfloop
