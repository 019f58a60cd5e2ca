#include "logcoef/search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

namespace logcoef {

namespace {

constexpr double kGolden = 0.61803398874989484820;

std::vector<std::size_t> lattice_counts(const std::vector<Axis>& axes, int resolution) {
    std::vector<std::size_t> counts(axes.size());
    for (std::size_t d = 0; d < axes.size(); ++d)
        counts[d] = axes[d].hi > axes[d].lo ? static_cast<std::size_t>(resolution) : 1;
    return counts;
}

std::vector<double> lattice_point(const std::vector<Axis>& axes,
                                  const std::vector<std::size_t>& counts, std::size_t index) {
    std::vector<double> x(axes.size());
    for (std::size_t d = 0; d < axes.size(); ++d) {
        const std::size_t i = index % counts[d];
        index /= counts[d];
        const double frac =
            counts[d] == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(counts[d] - 1);
        x[d] = axes[d].lo + frac * (axes[d].hi - axes[d].lo);
    }
    return x;
}

struct IndexedBest {
    double value = -std::numeric_limits<double>::infinity();
    std::size_t index = 0;
    bool any = false;
};

IndexedBest scan_range(const BoxObjective& f, const std::vector<Axis>& axes,
                       const std::vector<std::size_t>& counts, std::size_t begin,
                       std::size_t end) {
    IndexedBest best;
    for (std::size_t i = begin; i < end; ++i) {
        const double v = f(lattice_point(axes, counts, i));
        if (!best.any || v > best.value) {
            best.value = v;
            best.index = i;
            best.any = true;
        }
    }
    return best;
}

/// Golden-section maximum of g on [a, b] (assumed locally unimodal there).
double golden_max(const std::function<double(double)>& g, double a, double b, double tol) {
    double x1 = b - kGolden * (b - a);
    double x2 = a + kGolden * (b - a);
    double f1 = g(x1), f2 = g(x2);
    while (b - a > tol) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kGolden * (b - a);
            f2 = g(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - kGolden * (b - a);
            f1 = g(x1);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

GridResult grid_maximize(const BoxObjective& f, const std::vector<Axis>& axes, int resolution,
                         int threads) {
    if (resolution < 2) throw std::invalid_argument("grid_maximize: resolution must be >= 2");
    const std::vector<std::size_t> counts = lattice_counts(axes, resolution);
    std::size_t total = 1;
    for (std::size_t n : counts) total *= n;

    IndexedBest best;
    if (threads <= 1 || total < 1u << 14) {
        best = scan_range(f, axes, counts, 0, total);
    } else {
        const std::size_t nchunk = static_cast<std::size_t>(threads);
        std::vector<IndexedBest> parts(nchunk);
        std::vector<std::thread> pool;
        const std::size_t step = (total + nchunk - 1) / nchunk;
        for (std::size_t c = 0; c < nchunk; ++c) {
            const std::size_t b = c * step, e = std::min(total, b + step);
            pool.emplace_back([&, c, b, e] { parts[c] = scan_range(f, axes, counts, b, e); });
        }
        for (auto& t : pool) t.join();
        // lattice ties resolve to the smallest linear index
        for (const auto& p : parts) {
            if (!p.any) continue;
            if (!best.any || p.value > best.value ||
                (p.value == best.value && p.index < best.index)) {
                best = p;
            }
        }
    }
    GridResult out;
    out.value = best.value;
    out.point = lattice_point(axes, counts, best.index);
    return out;
}

GridResult refine_local(const BoxObjective& f, const std::vector<Axis>& axes,
                        std::vector<double> start, double tol, double window) {
    if (start.size() != axes.size())
        throw std::invalid_argument("refine_local: dimension mismatch");
    for (std::size_t d = 0; d < axes.size(); ++d)
        start[d] = std::clamp(start[d], axes[d].lo, axes[d].hi);

    double value = f(start);
    if (!std::isfinite(value)) throw std::runtime_error("refine_local: non-finite objective");

    const int max_cycles = 400;
    for (int cycle = 0; cycle < max_cycles; ++cycle) {
        double moved = 0.0;
        for (std::size_t d = 0; d < axes.size(); ++d) {
            if (axes[d].hi <= axes[d].lo) continue;
            const double w = window * (axes[d].hi - axes[d].lo);
            const double a = std::max(axes[d].lo, start[d] - w);
            const double b = std::min(axes[d].hi, start[d] + w);
            if (b - a < tol) continue;
            auto g = [&](double xd) {
                std::vector<double> x = start;
                x[d] = xd;
                const double v = f(x);
                if (!std::isfinite(v))
                    throw std::runtime_error("refine_local: non-finite objective");
                return v;
            };
            const double xd = golden_max(g, a, b, tol * 0.25);
            const double vd = g(xd);
            if (vd >= value) {
                moved = std::max(moved, std::abs(xd - start[d]));
                start[d] = xd;
                value = vd;
            }
        }
        if (moved < tol) break;
    }
    return {value, start};
}

RealPolynomial::RealPolynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
    while (coeffs_.size() > 1 && coeffs_.back() == 0.0) coeffs_.pop_back();
    if (coeffs_.empty()) coeffs_.push_back(0.0);
}

double RealPolynomial::operator()(double x) const {
    long double acc = 0.0L;
    for (std::size_t i = coeffs_.size(); i-- > 0;)
        acc = acc * static_cast<long double>(x) + static_cast<long double>(coeffs_[i]);
    return static_cast<double>(acc);
}

RealPolynomial RealPolynomial::derivative() const {
    if (coeffs_.size() <= 1) return RealPolynomial({0.0});
    std::vector<double> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        d[i - 1] = static_cast<double>(i) * coeffs_[i];
    return RealPolynomial(std::move(d));
}

namespace {

double bisect_root(const RealPolynomial& p, double a, double b, double tol) {
    double fa = p(a);
    for (int i = 0; i < 200 && b - a > tol; ++i) {
        const double m = 0.5 * (a + b);
        const double fm = p(m);
        if (fm == 0.0) return m;
        if ((fa < 0.0) != (fm < 0.0)) {
            b = m;
        } else {
            a = m;
            fa = fm;
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

std::vector<double> real_roots_in_interval(const RealPolynomial& poly, double lo, double hi,
                                           double tol, int brackets_per_unit) {
    if (!(lo < hi)) throw std::invalid_argument("real_roots_in_interval: lo must be < hi");
    if (poly.degree() == 0) return {};
    if (poly.degree() == 1) {
        const double r = -poly.coeffs()[0] / poly.coeffs()[1];
        if (r > lo && r < hi) return {r};
        return {};
    }

    // partition: brackets per unit length, plus the stationary points
    // (recursively isolated) to split even-multiplicity touches
    const int per_unit = brackets_per_unit > 0 ? brackets_per_unit : 10 * poly.degree();
    const int n = std::max(2, static_cast<int>(std::ceil((hi - lo) * per_unit)));
    std::vector<double> knots;
    knots.reserve(static_cast<std::size_t>(n) + 8);
    for (int i = 0; i <= n; ++i) knots.push_back(lo + (hi - lo) * i / n);
    for (double s : real_roots_in_interval(poly.derivative(), lo, hi, tol, brackets_per_unit))
        knots.push_back(s);
    std::sort(knots.begin(), knots.end());

    std::vector<double> roots;
    for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
        const double a = knots[i], b = knots[i + 1];
        if (b - a < tol * 1e-3) continue;
        const double fa = poly(a), fb = poly(b);
        if (fa == 0.0) {
            if (a > lo) roots.push_back(a);
            continue;
        }
        if ((fa < 0.0) != (fb < 0.0)) {
            roots.push_back(bisect_root(poly, a, b, tol));
        }
    }
    std::sort(roots.begin(), roots.end());
    std::vector<double> out;
    for (double r : roots) {
        if (r <= lo || r >= hi) continue;
        if (!out.empty() && std::abs(r - out.back()) <= tol) continue;
        out.push_back(r);
    }
    return out;
}

const RealPolynomial& poly_zeta1() {
    static const RealPolynomial p(
        {36.0, -60.0, -1095.0, -629.0, 623.0, 257.0, -49.0, 86.0, 20.0, -5.0, 6.0});
    return p;
}

const RealPolynomial& poly_octic_f2() {
    static const RealPolynomial p({2048.0, 0.0, -512.0, 0.0, -160.0, 0.0, 0.0, 0.0, 3.0});
    return p;
}

const RealPolynomial& poly_zeta2() {
    static const RealPolynomial p(
        {100.0, 140.0, -1135.0, -375.0, 459.0, 375.0, 147.0, -104.0, -32.0, -5.0, 6.0});
    return p;
}

const RealPolynomial& named_poly(const std::string& name) {
    if (name == "zeta1") return poly_zeta1();
    if (name == "zeta2") return poly_zeta2();
    if (name == "octic_f2") return poly_octic_f2();
    throw std::invalid_argument("unknown polynomial: " + name);
}

std::vector<StationaryCandidate> stationarity_candidates(const ClassSpec& cls) {
    const RealPolynomial* poly = nullptr;
    std::function<double(double)> p_of_c;
    switch (cls.id()) {
        case ClassId::F1:
            poly = &poly_zeta1();
            p_of_c = [](double c) {
                const double c2 = c * c, c3 = c2 * c, c4 = c3 * c;
                return (2.0 * c4 + 2.0 * c3 - 5.0 * c2 - 2.0 * c + 3.0) /
                       (3.0 * c * (c3 + 2.0 * c + 6.0));
            };
            break;
        case ClassId::F2:
            poly = &poly_octic_f2();
            p_of_c = [](double c) {
                return 2.0 * (c * c - 2.0) / (3.0 * (c * c + 4.0));
            };
            break;
        case ClassId::F3:
            poly = &poly_zeta2();
            p_of_c = [](double c) {
                const double c2 = c * c, c3 = c2 * c, c4 = c3 * c;
                return (2.0 * c4 + 2.0 * c3 - 7.0 * c2 - 12.0 * c - 5.0) /
                       (3.0 * c * (c3 - 2.0 * c - 10.0));
            };
            break;
    }
    const double divisor = 96.0 / gamma3_display_scale(cls.id());
    std::vector<StationaryCandidate> out;
    for (double c : real_roots_in_interval(*poly, 0.0, 2.0, 1e-9)) {
        StationaryCandidate cand{};
        cand.point = {c, 1.0, p_of_c(c)};
        cand.p_in_range = (cand.point.p >= -1.0 && cand.point.p <= 1.0);
        if (cand.p_in_range)
            cand.value = gamma3_objective(cls, cand.point) / divisor;
        else
            cand.value = std::numeric_limits<double>::quiet_NaN();
        out.push_back(cand);
    }
    return out;
}

double interior_r2_ratio(ClassId id, double c) {
    switch (id) {
        case ClassId::F1: {
            const double c3 = c * c * c;
            return (c3 + 2.0 * c + 6.0) / (3.0 * (c3 - 4.0 * c));
        }
        case ClassId::F2:
            return (c * c + 4.0) / (3.0 * (c * c - 4.0));
        case ClassId::F3: {
            const double c3 = c * c * c;
            return (c3 - 2.0 * c - 10.0) / (3.0 * c3 - 12.0 * c);
        }
    }
    throw std::logic_error("unreachable");
}

std::string target_name(Target t) { return t == Target::Gamma2 ? "gamma2" : "gamma3"; }

Target target_from_name(const std::string& name) {
    if (name == "gamma2") return Target::Gamma2;
    if (name == "gamma3") return Target::Gamma3;
    throw std::invalid_argument("unknown target: " + name);
}

namespace {

std::string pretty_bound(double v) {
    if (v == 0.0) return "0";
    if (v == 1.0) return "1";
    if (v == 2.0) return "2";
    if (v == -1.0) return "-1";
    return std::to_string(v);
}

std::string classify_stratum_pretty(const std::vector<Axis>& axes, const std::vector<double>& x,
                                    double tol) {
    std::vector<std::string> active;
    for (std::size_t d = 0; d < axes.size(); ++d) {
        if (std::abs(x[d] - axes[d].lo) <= tol)
            active.push_back(axes[d].name + "=" + pretty_bound(axes[d].lo));
        else if (std::abs(x[d] - axes[d].hi) <= tol)
            active.push_back(axes[d].name + "=" + pretty_bound(axes[d].hi));
    }
    if (active.empty()) return "interior";
    const std::size_t codim = active.size();
    std::string label;
    if (codim >= axes.size())
        label = "vertex";
    else if (codim == 1 && axes.size() == 3)
        label = "face";
    else
        label = "edge";
    std::string joined;
    for (const auto& a : active) {
        if (!joined.empty()) joined += "&";
        joined += a;
    }
    return label + ":" + joined;
}

/// Search one stratum: pinned axes carry lo == hi.
GridResult search_stratum(const BoxObjective& f, const std::vector<Axis>& axes, int resolution,
                          double tol, int threads) {
    const GridResult coarse = grid_maximize(f, axes, resolution, threads);
    const double window = 2.0 / static_cast<double>(resolution - 1);
    return refine_local(f, axes, coarse.point, tol, window);
}

}  // namespace

SearchReport verify_claimed_max(const ClassSpec& cls, Target which, int resolution, double tol,
                                int threads) {
    const ClaimedValues& ref = claimed(cls.id());
    SearchReport report{};
    report.class_id = cls.id();
    report.target = which;

    std::vector<Axis> axes;
    BoxObjective objective;
    if (which == Target::Gamma3) {
        const double divisor = 96.0 / gamma3_display_scale(cls.id());
        axes = {{"c", 0.0, 2.0}, {"r", 0.0, 1.0}, {"p", -1.0, 1.0}};
        objective = [&cls, divisor](const std::vector<double>& x) {
            return gamma3_objective(cls, {x[0], x[1], x[2]}) / divisor;
        };
        report.scale = gamma3_display_scale(cls.id());
        report.closed_form = ref.gamma3_display_max;
        report.gamma_closed_form = ref.gamma3_bound;
        report.axis_names = {"c", "r", "p"};
        report.face_r1 = stationarity_candidates(cls);
        if (cls.id() == ClassId::F2) {
            // the r=1, p=-1 edge value 2c|3c^2-8| peaks at 16 on the endpoint
            // c=2 while the interior hump 2c(8-3c^2) peaks at 10.0566; both
            // are reported because the claimed edge maximum is stated
            // ambiguously
            const double c_int = std::sqrt(8.0 / 9.0);
            const double interior = 2.0 * c_int * (8.0 - 3.0 * c_int * c_int);
            report.flags.push_back(
                "edge r=1,p=-1: endpoint maximum 16 at c=2; interior local maximum " +
                std::to_string(interior) + " at c=sqrt(8/9); claimed value is ambiguous (16 vs 10.0566)");
        }
    } else {
        axes = {{"d", 0.0, 2.0}, {"q", -1.0, 1.0}};
        objective = [&cls](const std::vector<double>& x) {
            return gamma2_objective(cls, {x[0], x[1]});
        };
        report.scale = 6.0;
        report.closed_form = ref.gamma2_objective_max;
        report.gamma_closed_form = ref.gamma2_bound;
        report.axis_names = {"d", "q"};
    }

    // stratified search: for every axis choose lo / hi / free, best value
    // wins, ties go to the stratum with fewer free axes
    GridResult best{-std::numeric_limits<double>::infinity(), {}};
    int best_free = std::numeric_limits<int>::max();
    const std::size_t n_strata = static_cast<std::size_t>(std::pow(3.0, axes.size()));
    for (std::size_t code = 0; code < n_strata; ++code) {
        std::vector<Axis> sub = axes;
        std::size_t c = code;
        int free_axes = 0;
        for (std::size_t d = 0; d < axes.size(); ++d) {
            const int mode = static_cast<int>(c % 3);
            c /= 3;
            if (mode == 0) {
                ++free_axes;
            } else if (mode == 1) {
                sub[d].hi = sub[d].lo;
            } else {
                sub[d].lo = sub[d].hi;
            }
        }
        const GridResult res = search_stratum(objective, sub, resolution, tol, threads);
        const bool better = res.value > best.value + 1e-12 ||
                            (res.value > best.value - 1e-12 && free_axes < best_free);
        if (better) {
            best = res;
            best_free = free_axes;
        }
    }

    report.max_value = best.value;
    report.argmax = best.point;
    report.stratum = classify_stratum_pretty(axes, best.point, 1e-7);
    report.abs_gap = std::abs(report.max_value - report.closed_form);
    report.gamma_bound = report.max_value / report.scale;
    return report;
}

}  // namespace logcoef
